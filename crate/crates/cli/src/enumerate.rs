use std::collections::BTreeSet;

use clap::{Args, ValueEnum};
use serde::Serialize;
use updown::oscillating::oscillating_tableaux;
use updown::partition::partitions_of;
use updown::sundaram::lr_tableaux;
use updown::tableau::standard_tableaux;
use updown::Partition;

use crate::{json_line, parse_json, CliError, CliResult, Format, FormatArg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// n-symplectic oscillating tableaux of length r (ending at --shape if given).
    Osc,
    /// Standard Young tableaux of --shape.
    Syt,
    /// n-symplectic Littlewood-Richardson tableaux of shape --shape / --inner.
    Lr,
}

#[derive(Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum, default_value_t = Family::Osc)]
    family: Family,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long)]
    r: Option<usize>,
    /// Partition as a JSON array, e.g. [2,1].
    #[arg(long)]
    shape: Option<String>,
    /// Inner partition of the skew shape for --family lr.
    #[arg(long)]
    inner: Option<String>,
    /// Print at most this many items; the count still covers all of them.
    #[arg(long)]
    limit: Option<usize>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Serialize)]
struct Item<T: Serialize> {
    index: usize,
    tableau: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    descents: Option<BTreeSet<usize>>,
}

fn print_items<T: Serialize + std::fmt::Display>(
    items: impl Iterator<Item = (T, Option<BTreeSet<usize>>)>,
    limit: Option<usize>,
    format: Format,
) {
    let mut count = 0;
    for (tableau, descents) in items {
        count += 1;
        if limit.is_some_and(|l| count > l) {
            continue;
        }
        match format {
            Format::Json => println!("{}", json_line(&Item { index: count, tableau, descents })),
            Format::Ascii => match descents {
                Some(d) => println!("{count:>6}  {tableau}  Des={d:?}"),
                None => println!("{count:>6}  {tableau}"),
            },
        }
    }
    match format {
        Format::Json => println!("{}", json_line(&serde_json::json!({ "count": count }))),
        Format::Ascii => println!("count: {count}"),
    }
}

fn shape_arg(what: &'static str, text: Option<&String>) -> CliResult<Option<Partition>> {
    text.map(|t| parse_json::<Partition>(what, t)).transpose()
}

pub fn run(args: &EnumerateArgs) -> CliResult<()> {
    let shape = shape_arg("--shape", args.shape.as_ref())?;
    let format = args.format.format;
    match args.family {
        Family::Osc => {
            let r = args.r.ok_or_else(|| CliError::Usage("--r is required for --family osc".into()))?;
            let items = oscillating_tableaux(r, args.n, shape.as_ref()).map(|t| {
                let d = t.descents();
                (t, Some(d))
            });
            print_items(items, args.limit, format);
        }
        Family::Syt => {
            let shape = shape.ok_or_else(|| CliError::Usage("--shape is required for --family syt".into()))?;
            let items = standard_tableaux(&shape).map(|t| {
                let d = t.descents();
                (t, Some(d))
            });
            print_items(items, args.limit, format);
        }
        Family::Lr => {
            let outer = shape.ok_or_else(|| CliError::Usage("--shape is required for --family lr".into()))?;
            let inner = shape_arg("--inner", args.inner.as_ref())?.unwrap_or_else(Partition::empty);
            if !inner.is_contained_in(&outer) {
                return Err(CliError::Usage(format!("inner shape {inner} is not contained in {outer}")));
            }
            let n = args.n;
            let items = partitions_of(outer.size() - inner.size())
                .into_iter()
                .filter(|b| b.has_even_columns(None))
                .flat_map(move |beta| lr_tableaux(&outer, &inner, &beta, Some(n)).collect::<Vec<_>>())
                .map(|s| (s, None));
            print_items(items, args.limit, format);
        }
    }
    Ok(())
}
