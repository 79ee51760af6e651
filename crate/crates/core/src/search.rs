/// Outcome of expanding one search node.
pub(crate) enum Step<N, O> {
    Emit(O),
    Branch(Vec<N>),
}

/// Lazy depth-first enumeration. Children are visited in the order the
/// expansion function returns them, so the output order is deterministic.
pub(crate) struct Dfs<N, F> {
    stack: Vec<N>,
    expand: F,
}

impl<N, O, F> Dfs<N, F>
where
    F: FnMut(N) -> Step<N, O>,
{
    pub(crate) fn new(root: N, expand: F) -> Self {
        Dfs { stack: vec![root], expand }
    }
}

impl<N, O, F> Iterator for Dfs<N, F>
where
    F: FnMut(N) -> Step<N, O>,
{
    type Item = O;

    fn next(&mut self) -> Option<O> {
        while let Some(node) = self.stack.pop() {
            match (self.expand)(node) {
                Step::Emit(out) => return Some(out),
                Step::Branch(children) => self.stack.extend(children.into_iter().rev()),
            }
        }
        None
    }
}
