mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use spin_core::cyclotomic::{
    cyclotomic_poly, decompositions, euler_phi, model_matrix, phi_at_one, shifted_det_is_odd,
    unique_spin_iff_quotient_genus_zero,
};
use spin_core::fixtures::{klein_data, KLEIN_EXPECTED_COUNTS};
use spin_core::hyperelliptic::{
    bolza_report, classify_orbit_shape, fixed_count_brute, fixed_count_closed_form, BranchPermutation,
    MAX_ENUM_GENUS,
};
use spin_core::io::{matrix_json, number, parse_action_document, parse_pairing_document, ActionDocument};
use spin_core::{
    count_invariant, group_invariant_spins, invariant_spins, quadratic_fixed_count, v_vector, v_vector_int,
    AffineSolutionSet, BitVector, HomologyAction, Pairing,
};

/// Solution sets with more free parameters than this are summarized, not listed.
const MAX_LISTED_NULLITY: usize = 12;

#[derive(Parser)]
#[command(name = "spin", version, about = "Invariant spin structures under surface automorphisms")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// `standard`, or a JSON file with the pairing matrix. Overrides the
    /// pairing stored in input documents.
    #[arg(long, global = true)]
    pairing: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// List every invariant spin structure of one action.
    Solve(InputArg),
    /// Count invariant spin structures of one action.
    Count {
        #[command(flatten)]
        input: InputArg,
        /// Cross-check with the quadratic-refinement sweep.
        #[arg(long)]
        oracle: bool,
    },
    /// Structures invariant under every given action.
    Group {
        #[arg(long = "input", required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Hyperelliptic branch-point model.
    #[command(subcommand)]
    Hyper(HyperCommand),
    /// Cyclotomic canonical forms.
    #[command(subcommand)]
    Cyclo(CycloCommand),
    /// Klein quartic reproduction from the bundled fixtures.
    Klein,
}

#[derive(Args)]
struct InputArg {
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand)]
enum HyperCommand {
    /// Fixed spin classes of one branch permutation.
    Count {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        perm: String,
    },
    /// The genus-2 automorphism catalog with computed and expected counts.
    Table2,
}

#[derive(Subcommand)]
enum CycloCommand {
    /// Admissible decompositions for an order-n action on genus g.
    Decomp {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        emit_model: bool,
    },
    /// The cyclotomic polynomial Φ_d.
    Phi {
        #[arg(long)]
        d: u64,
    },
}

/// Why a run stopped early.
enum Failure {
    /// Bad input or usage (exit 2).
    Invalid(String),
    /// The computation disagreed with itself or with a reference value (exit 3).
    Discrepancy(Value, String),
}

impl From<spin_core::Error> for Failure {
    fn from(e: spin_core::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(v) => {
            emit(&render::render(&v, cli.format));
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Discrepancy(v, msg)) => {
            emit(&render::render(&v, cli.format));
            eprintln!("discrepancy: {msg}");
            ExitCode::from(3)
        }
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Solve(arg) => solve(&load(&arg.input, cli.pairing.as_deref())?),
        Command::Count { input, oracle } => count(&load(&input.input, cli.pairing.as_deref())?, *oracle),
        Command::Group { inputs } => group(inputs, cli.pairing.as_deref()),
        Command::Hyper(HyperCommand::Count { genus, perm }) => hyper_count(*genus, perm),
        Command::Hyper(HyperCommand::Table2) => hyper_table2(),
        Command::Cyclo(CycloCommand::Decomp {
            order,
            genus,
            emit_model,
        }) => cyclo_decomp(*order, *genus, *emit_model),
        Command::Cyclo(CycloCommand::Phi { d }) => cyclo_phi(*d),
        Command::Klein => klein(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path, pairing: Option<&str>) -> Result<ActionDocument<BigInt>, Failure> {
    let text = read(path)?;
    let mut doc = parse_action_document::<BigInt>(&text)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    match pairing {
        None => {}
        Some("standard") => {
            doc.pairing = Pairing::standard(doc.action.genus())?;
            doc.standard_pairing = true;
        }
        Some(file) => {
            let text = read(Path::new(file))?;
            doc.pairing = parse_pairing_document(&text, doc.action.genus())
                .map_err(|e| Failure::Invalid(format!("{file}: {e}")))?;
            doc.standard_pairing = false;
        }
    }
    Ok(doc)
}

fn bits(v: &BitVector) -> Value {
    Value::from(v.to_bits())
}

fn solution_json(set: &AffineSolutionSet) -> Value {
    let listed = match set.nullity() {
        Some(h) if h > MAX_LISTED_NULLITY => Value::Null,
        _ => Value::from(set.sorted_elements().iter().map(bits).collect::<Vec<_>>()),
    };
    json!({
        "count": number(&BigInt::from(set.cardinality())),
        "nullity": set.nullity(),
        "solutions": listed,
    })
}

fn solve(doc: &ActionDocument<BigInt>) -> Outcome {
    let set = invariant_spins(&doc.action, &doc.pairing)?;
    let mut out = json!({
        "genus": doc.action.genus(),
        "v": v_vector_int(&doc.action, &doc.pairing)?.iter().map(number).collect::<Vec<_>>(),
    });
    merge(&mut out, solution_json(&set));
    Ok(out)
}

fn count(doc: &ActionDocument<BigInt>, oracle: bool) -> Outcome {
    let set = invariant_spins(&doc.action, &doc.pairing)?;
    let total = count_invariant(&doc.action, &doc.pairing)?;
    let mut out = json!({
        "genus": doc.action.genus(),
        "count": number(&BigInt::from(total.clone())),
        "nullity": set.nullity(),
    });
    if oracle {
        let q = quadratic_fixed_count(&doc.action, &doc.pairing)?;
        out["oracle"] = Value::from(q);
        if total != q.into() {
            return Err(Failure::Discrepancy(out, format!("linear count {total} but refinement sweep {q}")));
        }
    }
    Ok(out)
}

fn group(paths: &[PathBuf], pairing: Option<&str>) -> Outcome {
    let docs = paths
        .iter()
        .map(|p| load(p, pairing))
        .collect::<Result<Vec<_>, _>>()?;
    let first = &docs[0];
    if let Some((i, _)) = docs.iter().enumerate().find(|(_, d)| d.pairing != first.pairing) {
        return Err(Failure::Invalid(format!(
            "{}: pairing differs from {}",
            paths[i].display(),
            paths[0].display()
        )));
    }
    let actions: Vec<HomologyAction> = docs.iter().map(|d| d.action.clone()).collect();
    let set = group_invariant_spins(&actions, &first.pairing)?;
    let mut out = json!({ "genus": first.action.genus(), "generators": paths.len() });
    merge(&mut out, solution_json(&set));
    Ok(out)
}

fn hyper_count(genus: u32, perm: &str) -> Outcome {
    let p = BranchPermutation::parse(genus, perm)?;
    let shape = classify_orbit_shape(&p).ok();
    let closed = match &shape {
        Some(s) => Some(fixed_count_closed_form(s, genus)?),
        None => None,
    };
    let brute = if genus <= MAX_ENUM_GENUS {
        Some(fixed_count_brute(&p)?)
    } else {
        None
    };
    if closed.is_none() && brute.is_none() {
        return Err(Failure::Invalid(format!(
            "perm: not rotation-like and genus {genus} is beyond the enumeration bound {MAX_ENUM_GENUS}"
        )));
    }
    let out = json!({
        "genus": genus,
        "perm": p.to_string(),
        "closed_form": closed,
        "brute_force": brute,
        "shape": shape,
    });
    match (closed, brute) {
        (Some(c), Some(b)) if c != b => Err(Failure::Discrepancy(
            out,
            format!("closed form {c} but brute force {b}"),
        )),
        _ => Ok(out),
    }
}

fn hyper_table2() -> Outcome {
    let rows = bolza_report()?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.computed != r.expected)
        .map(|r| r.case.clone())
        .collect();
    let out = json!({
        "rows": rows.iter().map(|r| json!({
            "case": r.case,
            "group": r.group,
            "generators": r.generators.join(" "),
            "expected": r.expected,
            "computed": r.computed,
        })).collect::<Vec<_>>(),
    });
    if bad.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Discrepancy(out, format!("cases {} disagree", bad.join(", "))))
    }
}

fn cyclo_decomp(order: u64, genus: u32, emit_model: bool) -> Outcome {
    if order == 0 {
        return Err(Failure::Invalid("order: must be positive".into()));
    }
    if genus == 0 {
        return Err(Failure::Invalid("genus: must be positive".into()));
    }
    let mut list = Vec::new();
    for dec in decompositions(order, genus) {
        let quotient_genus = if order % 2 == 1 {
            Some(unique_spin_iff_quotient_genus_zero(&dec)?.quotient_genus_eigen)
        } else {
            None
        };
        let mut entry = json!({
            "parts": dec.parts().iter().map(|&(d, e)| json!([d, e])).collect::<Vec<_>>(),
            "decomposition": dec.to_string(),
            "fixed_multiplicity": dec.fixed_multiplicity(),
            "unique_spin": shifted_det_is_odd(&dec),
            "quotient_genus": quotient_genus,
        });
        if emit_model {
            entry["model"] = matrix_json(model_matrix::<BigInt>(&dec).matrix());
        }
        list.push(entry);
    }
    Ok(json!({
        "order": order,
        "genus": genus,
        "count": list.len(),
        "decompositions": list,
    }))
}

fn cyclo_phi(d: u64) -> Outcome {
    if d == 0 {
        return Err(Failure::Invalid("d: must be positive".into()));
    }
    let p = cyclotomic_poly::<BigInt>(d);
    Ok(json!({
        "d": d,
        "degree": euler_phi(d),
        "value_at_one": phi_at_one(d),
        "polynomial": p.to_string(),
        "coefficients": p.coeffs().iter().map(number).collect::<Vec<_>>(),
    }))
}

fn klein() -> Outcome {
    let k = klein_data()?;
    let mut problems = Vec::new();
    let mut gens = Vec::new();
    for ((name, a, printed), expected) in k.generators().into_iter().zip(KLEIN_EXPECTED_COUNTS) {
        let v = v_vector_int(a, &k.pairing)?;
        if v != printed {
            problems.push(format!("V_{name} differs from the fixture"));
        }
        let set = invariant_spins(a, &k.pairing)?;
        let total = count_invariant(a, &k.pairing)?;
        if total != expected.into() {
            problems.push(format!("{name} has {total} invariant structures, expected {expected}"));
        }
        gens.push(json!({
            "name": name,
            "order": a.matrix().multiplicative_order(1000),
            "v": v.iter().map(number).collect::<Vec<_>>(),
            "v_mod2": bits(&v_vector(a, &k.pairing)?),
            "count": number(&BigInt::from(total)),
            "solutions": set.sorted_elements().iter().map(bits).collect::<Vec<_>>(),
        }));
    }
    let all = [k.r.clone(), k.s.clone(), k.t.clone()];
    let common = group_invariant_spins(&all, &k.pairing)?.sorted_elements();
    let want = BitVector::from_bits(&[0, 0, 1, 0, 0, 0]);
    if common != [want] {
        problems.push("group-invariant set is not the single vector [0,0,1,0,0,0]".into());
    }
    let rst = k.r.compose(&k.s)?.compose(&k.t)?;
    let out = json!({
        "generators": gens,
        "group_solutions": common.iter().map(bits).collect::<Vec<_>>(),
        "rst_is_identity": rst.matrix().is_identity(),
    });
    if problems.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Discrepancy(out, problems.join("; ")))
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}
