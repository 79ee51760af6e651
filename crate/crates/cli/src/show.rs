use std::collections::BTreeSet;

use clap::{Args, ValueEnum};
use serde_json::json;
use updown::growth::{descent_visualization, roby as roby_construction, GrowthDiagram};
use updown::sundaram::{descents_intermediate, sun, sun1_trace};
use updown::{OscillatingTableau, SunIntermediate};

use crate::{json_line, parse_json, CliError, CliResult, Format, FormatArg};

#[derive(Args)]
pub struct TableauArgs {
    /// Oscillating tableau as a JSON array of partitions, e.g. [[],[1],[1,1]].
    tableau: String,
    /// Rank of the symplectic group; defaults to the largest number of rows.
    #[arg(long)]
    n: Option<usize>,
    /// Seed word for the stacked descent diagram (roby only), e.g. [6,3,7].
    #[arg(long)]
    seed: Option<String>,
    #[command(flatten)]
    format: FormatArg,
}

fn parse_tableau(text: &str) -> CliResult<OscillatingTableau> {
    parse_json("the oscillating tableau", text)
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    let items: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

pub fn sundaram(args: &TableauArgs) -> CliResult<()> {
    let t = parse_tableau(&args.tableau)?;
    let n = args.n.unwrap_or_else(|| t.min_rank());
    let result = sun(&t, n)?;
    let trace = sun1_trace(&t);
    let word = t.to_word(n)?;
    let mid = SunIntermediate { iota: result.iota.clone(), tableau: result.t.clone() };
    let des_t = t.descents();
    let des_q = result.q.descents();
    let des_mid = descents_intermediate(&mid);
    match args.format.format {
        Format::Json => {
            for step in &trace {
                println!("{}", json_line(&json!({ "step": step })));
            }
            println!(
                "{}",
                json_line(&json!({
                    "result": result,
                    "word": word.letters(),
                    "descents": { "oscillating": des_t, "word": word.descents(), "intermediate": des_mid, "q": des_q },
                }))
            );
        }
        Format::Ascii => {
            println!("{:>3}  {:<11}  {:<6}  {:<7}  {:<24}  T", "k", "step", "box", "pair", "ι");
            for s in &trace {
                let kind = format!("{:?}", s.kind).to_lowercase();
                let pair = s.pair.map(|(a, b)| format!("({a},{b})")).unwrap_or_default();
                println!(
                    "{:>3}  {:<11}  {:<6}  {:<7}  {:<24}  {}",
                    s.k,
                    kind,
                    s.cell.to_string(),
                    pair,
                    s.iota.to_string(),
                    s.tableau
                );
            }
            println!("word = {word}");
            println!("ι = {}", result.iota);
            println!("T = {}", result.t);
            println!("I = {}", result.i);
            println!("Q = {}", result.q);
            println!("S = {}", result.s);
            println!("Des(osc) = {}", fmt_set(&des_t));
            println!("Des(w) = {}", fmt_set(&word.descents()));
            println!("Des(ι,T) = {}", fmt_set(&des_mid));
            println!("Des(Q) = {}", fmt_set(&des_q));
        }
    }
    Ok(())
}

pub fn roby(args: &TableauArgs) -> CliResult<()> {
    let t = parse_tableau(&args.tableau)?;
    let out = roby_construction(&t);
    let picture = match &args.seed {
        Some(text) => Some(descent_visualization(&t, &parse_json::<Vec<usize>>("--seed", text)?)?),
        None => None,
    };
    match args.format.format {
        Format::Json => {
            println!("{}", json_line(&json!({ "roby": out, "descents": t.descents(), "stacked": picture })));
        }
        Format::Ascii => {
            println!("growth diagram:");
            print!("{}", out.diagram.render_ascii());
            println!();
            println!("forward diagram of the crosses:");
            print!("{}", out.second.render_ascii());
            println!();
            println!("A = {}", fmt_set(&out.a));
            println!("ι = {}", out.iota);
            println!("T = {}", out.t);
            println!("Q = {}", out.q);
            println!("I = {}", out.i);
            println!("Des(osc) = {}", fmt_set(&t.descents()));
            if let Some(p) = picture {
                println!();
                println!("seed diagram:");
                print!("{}", p.seed_diagram.render_ascii());
                let rows: Vec<String> = p.cross_rows.iter().map(usize::to_string).collect();
                println!("cross rows = {}", rows.join(" "));
                println!("Des(stacked) = {}", fmt_set(&p.descents));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// Roby's diagram with the oscillating tableau on the diagonal.
    Main,
    /// Forward diagram of the crosses alone.
    Second,
    /// Diagram of the --seed word.
    Seed,
}

#[derive(Args)]
pub struct RenderArgs {
    /// Oscillating tableau as a JSON array of partitions.
    #[arg(long, conflicts_with = "crosses")]
    tableau: Option<String>,
    /// Crosses as JSON pairs [row, col], both 1-based, rows from the top.
    #[arg(long)]
    crosses: Option<String>,
    #[arg(long, requires = "crosses")]
    rows: Option<usize>,
    #[arg(long, requires = "crosses")]
    cols: Option<usize>,
    #[arg(long, value_enum, default_value_t = Which::Main)]
    which: Which,
    #[arg(long)]
    seed: Option<String>,
    #[command(flatten)]
    format: FormatArg,
}

pub fn render(args: &RenderArgs) -> CliResult<()> {
    let diagram: GrowthDiagram = match (&args.tableau, &args.crosses) {
        (Some(text), None) => {
            let t = parse_tableau(text)?;
            match args.which {
                Which::Main => roby_construction(&t).diagram,
                Which::Second => roby_construction(&t).second,
                Which::Seed => {
                    let text = args.seed.as_ref().ok_or_else(|| CliError::Usage("--which seed needs --seed".into()))?;
                    descent_visualization(&t, &parse_json::<Vec<usize>>("--seed", text)?)?.seed_diagram
                }
            }
        }
        (None, Some(text)) => {
            let crosses: BTreeSet<(usize, usize)> = parse_json("--crosses", text)?;
            let rows = args.rows.unwrap_or_else(|| crosses.iter().map(|c| c.0).max().unwrap_or(0));
            let cols = args.cols.unwrap_or_else(|| crosses.iter().map(|c| c.1).max().unwrap_or(0));
            GrowthDiagram::from_crosses(rows, cols, crosses)?
        }
        _ => return Err(CliError::Usage("give exactly one of --tableau and --crosses".into())),
    };
    match args.format.format {
        Format::Json => println!("{}", json_line(&diagram)),
        Format::Ascii => print!("{}", diagram.render_ascii()),
    }
    Ok(())
}
