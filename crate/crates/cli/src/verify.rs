use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use updown::growth::roby;
use updown::oscillating::oscillating_tableaux;
use updown::partition::{partitions_of, partitions_with_length};
use updown::rs::{descents_word, involution_from_tableau, rs_insert_word, rs_involution};
use updown::sundaram::{sun, sun1};
use updown::symfunc::{
    berele_identity, format_schur_expansion, frobenius_via_descents, frobenius_via_lr, invariant_character,
    lattice_word_identity, schur_expansion, schur_qsym_identity, Comparison,
};
use updown::{LaurentPolynomial, Partition};

use crate::{json_line, parse_json, CliError, CliResult, Format, FormatArg};

pub const MAX_N: usize = 3;
pub const MAX_R: usize = 8;
pub const MAX_VARS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// Des(T) = Des(Q) = Des(w) for every oscillating tableau.
    Descents,
    /// Roby's construction agrees with Sundaram's bijection.
    Roby,
    /// s_μ = Σ F_Des(Q) over standard tableaux.
    SchurQsym,
    /// s_μ = Σ F_Des(w) over reverse lattice words.
    #[value(alias = "eq5")]
    LatticeWords,
    /// Σ a(λ,μ) s_λ = Σ F_Des(T) over oscillating tableaux of shape μ.
    Frobenius,
    /// The μ = ∅ character equals the sum of even-column Schur functions.
    Invariant,
    /// (Σ x_i + x_i⁻¹)^r = Σ_μ |Osc(r,n,μ)| sp_μ.
    Berele,
    /// Des(π) = Des(Q) and the involution criterion over S_r.
    RsLemmas,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    identity: Identity,
    /// Largest symplectic rank checked (1..=3).
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Largest length or size checked (0..=8).
    #[arg(long, default_value_t = 4)]
    r: usize,
    /// Restrict to one partition, as a JSON array.
    #[arg(long)]
    shape: Option<String>,
    /// Number of variables for polynomial identities; defaults to the degree.
    #[arg(long)]
    vars: Option<usize>,
    /// Print at most this many instance lines; all are still checked.
    #[arg(long)]
    limit: Option<usize>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Serialize)]
struct Report {
    identity: String,
    instance: String,
    status: &'static str,
    detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Value>,
}

type Check = Result<String, (String, Value)>;
type Job = (String, Box<dyn Fn() -> Check + Send + Sync>);

fn schur_or_raw(p: &LaurentPolynomial, k: usize) -> String {
    match schur_expansion(p, k) {
        Some(terms) => format_schur_expansion(&terms),
        None => p.to_string(),
    }
}

/// `k = None` prints raw monomials instead of a Schur expansion.
fn compare(c: Comparison, k: Option<usize>) -> Check {
    let show = |p: &LaurentPolynomial| match k {
        Some(k) => schur_or_raw(p, k),
        None => p.to_string(),
    };
    let detail = format!("lhs = {}; rhs = {}", show(&c.lhs), show(&c.rhs));
    if c.holds() {
        Ok(detail)
    } else {
        let diff = c.difference();
        Err((detail, json!({ "lhs": c.lhs, "rhs": c.rhs, "difference": diff })))
    }
}

fn end_shapes(r: usize, n: usize) -> Vec<Partition> {
    (0..=r).rev().step_by(2).flat_map(|size| partitions_with_length(size, n)).collect()
}

fn check_descents(r: usize, n: usize) -> Check {
    let mut count = 0;
    for t in oscillating_tableaux(r, n, None) {
        let res = sun(&t, n).map_err(|e| (e.to_string(), json!({ "tableau": t })))?;
        let word = t.to_word(n).map_err(|e| (e.to_string(), json!({ "tableau": t })))?;
        let (dt, dq, dw) = (t.descents(), res.q.descents(), word.descents());
        if dt != dq || dt != dw {
            return Err((
                format!("{t}: Des(T)={dt:?} Des(Q)={dq:?} Des(w)={dw:?}"),
                json!({ "tableau": t, "q": res.q, "word": word.letters() }),
            ));
        }
        count += 1;
    }
    Ok(format!("{count} tableaux"))
}

fn check_roby(r: usize, n: usize) -> Check {
    let mut count = 0;
    for t in oscillating_tableaux(r, n, None) {
        let res = sun(&t, n).map_err(|e| (e.to_string(), json!({ "tableau": t })))?;
        let mid = sun1(&t);
        let rob = roby(&t);
        if rob.iota != mid.iota || rob.t != mid.tableau || rob.i != res.i || rob.q != res.q {
            return Err((
                format!("{t}: Roby and Sundaram disagree"),
                json!({ "tableau": t, "roby": rob, "sundaram": res }),
            ));
        }
        count += 1;
    }
    Ok(format!("{count} tableaux"))
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for perm in permutations(r - 1) {
        for pos in 0..=perm.len() {
            let mut v = perm.clone();
            v.insert(pos, r);
            out.push(v);
        }
    }
    out
}

fn check_rs(r: usize) -> Check {
    let perms = permutations(r);
    for perm in &perms {
        let (p, q) = rs_insert_word(perm);
        if descents_word(perm) != q.descents() {
            return Err((format!("{perm:?}: Des(π) ≠ Des(Q)"), json!({ "permutation": perm, "q": q })));
        }
        let fpf = (1..=r).all(|k| perm[perm[k - 1] - 1] == k && perm[k - 1] != k);
        let criterion = p == q && p.shape().has_even_columns(None);
        let round_trip = !fpf || involution_from_tableau(&p).is_ok_and(|iota| rs_involution(&iota) == p);
        if fpf != criterion || !round_trip {
            return Err((
                format!("{perm:?}: involution criterion fails"),
                json!({ "permutation": perm, "p": p, "q": q }),
            ));
        }
    }
    Ok(format!("{} permutations", perms.len()))
}

fn jobs(args: &VerifyArgs, shape: Option<&Partition>) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let vars = args.vars;
    let shapes_up_to = |r: usize| -> Vec<Partition> {
        match shape {
            Some(s) if s.size() <= r => vec![s.clone()],
            Some(_) => Vec::new(),
            None => (0..=r).flat_map(partitions_of).collect(),
        }
    };
    match args.identity {
        Identity::Descents | Identity::Roby | Identity::Invariant | Identity::Berele => {
            for n in 1..=args.n {
                for r in 0..=args.r {
                    let k = vars.unwrap_or(r);
                    let job: Box<dyn Fn() -> Check + Send + Sync> = match args.identity {
                        Identity::Descents => Box::new(move || check_descents(r, n)),
                        Identity::Roby => Box::new(move || check_roby(r, n)),
                        Identity::Invariant => Box::new(move || {
                            let lhs = frobenius_via_descents(r, &Partition::empty(), n, k);
                            compare(Comparison { lhs, rhs: invariant_character(r, n, k) }, Some(k))
                        }),
                        _ => Box::new(move || compare(berele_identity(r, n), None)),
                    };
                    jobs.push((format!("n={n} r={r}"), job));
                }
            }
        }
        Identity::Frobenius => {
            for n in 1..=args.n {
                for r in 0..=args.r {
                    let k = vars.unwrap_or(r);
                    for mu in end_shapes(r, n) {
                        if shape.is_some_and(|s| s != &mu) {
                            continue;
                        }
                        let label = format!("n={n} r={r} μ={mu}");
                        jobs.push((
                            label,
                            Box::new(move || {
                                let lhs = frobenius_via_lr(r, &mu, n, k);
                                compare(Comparison { lhs, rhs: frobenius_via_descents(r, &mu, n, k) }, Some(k))
                            }),
                        ));
                    }
                }
            }
        }
        Identity::SchurQsym | Identity::LatticeWords => {
            let words = args.identity == Identity::LatticeWords;
            for mu in shapes_up_to(args.r) {
                let k = vars.unwrap_or(mu.size());
                jobs.push((
                    format!("μ={mu} k={k}"),
                    Box::new(move || {
                        let c = if words { lattice_word_identity(&mu, k) } else { schur_qsym_identity(&mu, k) };
                        compare(c, Some(k))
                    }),
                ));
            }
        }
        Identity::RsLemmas => {
            for r in 0..=args.r {
                jobs.push((format!("r={r}"), Box::new(move || check_rs(r))));
            }
        }
    }
    jobs
}

fn thread_pool() -> CliResult<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(text) = std::env::var("OSC_THREADS") {
        let threads: usize = text
            .trim()
            .parse()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| CliError::Usage(format!("OSC_THREADS must be a positive integer, got {text:?}")))?;
        builder = builder.num_threads(threads);
    }
    builder.build().map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))
}

/// Runs every instance and prints one line each. Returns whether all passed.
pub fn run(args: &VerifyArgs) -> CliResult<bool> {
    if !(1..=MAX_N).contains(&args.n) {
        return Err(CliError::Usage(format!("--n must be in 1..={MAX_N}")));
    }
    if args.r > MAX_R {
        return Err(CliError::Usage(format!("--r must be at most {MAX_R}")));
    }
    if args.vars.is_some_and(|k| k > MAX_VARS) {
        return Err(CliError::Usage(format!("--vars must be at most {MAX_VARS}")));
    }
    let shape: Option<Partition> = args.shape.as_deref().map(|t| parse_json("--shape", t)).transpose()?;
    let name = args.identity.to_possible_value().expect("no skipped variants").get_name().to_string();
    let jobs = jobs(args, shape.as_ref());
    if jobs.is_empty() {
        return Err(CliError::Usage("no instances in the requested range".into()));
    }
    let results: Vec<(String, Check)> =
        thread_pool()?.install(|| jobs.into_par_iter().map(|(label, job)| (label, job())).collect());
    let total = results.len();
    let failed = results.iter().filter(|(_, c)| c.is_err()).count();
    for (idx, (instance, check)) in results.into_iter().enumerate() {
        if args.limit.is_some_and(|l| idx >= l) {
            break;
        }
        let report = match check {
            Ok(detail) => Report { identity: name.clone(), instance, status: "PASS", detail, counterexample: None },
            Err((detail, cx)) => {
                Report { identity: name.clone(), instance, status: "FAIL", detail, counterexample: Some(cx) }
            }
        };
        match args.format.format {
            Format::Json => println!("{}", json_line(&report)),
            Format::Ascii => {
                println!("{}  {:<10}  {:<18}  {}", report.status, report.identity, report.instance, report.detail);
                if let Some(cx) = &report.counterexample {
                    println!("      counterexample: {}", json_line(cx));
                }
            }
        }
    }
    let verdict = if failed == 0 { "PASS" } else { "FAIL" };
    match args.format.format {
        Format::Json => println!(
            "{}",
            json_line(
                &json!({ "summary": { "identity": name, "instances": total, "failed": failed, "status": verdict } })
            )
        ),
        Format::Ascii => println!("{verdict}  {name}: {total} instances, {failed} failed"),
    }
    Ok(failed == 0)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        let set: BTreeSet<Vec<usize>> = permutations(4).into_iter().collect();
        assert_eq!(set.len(), 24);
    }

    #[test]
    fn checks_pass_on_small_ranges() {
        assert!(check_descents(5, 1).is_ok());
        assert!(check_roby(5, 2).is_ok());
        assert!(check_rs(4).is_ok());
        let c = compare(berele_identity(3, 1), None).unwrap();
        assert!(c.contains("lhs"));
    }
}
