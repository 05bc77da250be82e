use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pctkt::pc::{verify_lemma1, DEFAULT_ENUM_BOUND};
use pctkt::quadfield::{class_group, scan_chunked, verify_tables, DEFAULT_CHUNK};
use pctkt::transfer::{
    analyze, identify_tower_group, type_label, verify_theorem1, ComparisonMode,
};
use pctkt::tree::{build_tree, smallgroups_label};
use pctkt::{AbelianInvariants, Error, GroupParams, PcGroup};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "pctkt", version, about = "Coclass-1 3-groups, Artin transfers and real quadratic 3-class groups")]
struct Cli {
    /// Print abelian invariants in logarithmic notation, e.g. (2,2) for (9,9).
    #[arg(long, global = true)]
    log_invariants: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build G_a^n(z,w) and print its Artin pattern.
    Group(GroupArgs),
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(Verify),
    /// Emit the coclass tree.
    Tree {
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = TreeFormat::Dot)]
        format: TreeFormat,
    },
    /// Identify the tower group from a deep transfer kernel type.
    Identify {
        #[arg(long)]
        e: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        kappa_d: Vec<u64>,
        /// Compare positionwise instead of up to permutation.
        #[arg(long)]
        ordered: bool,
        #[arg(long)]
        json: bool,
    },
    /// Real quadratic fields.
    #[command(subcommand)]
    Field(Field),
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: i8,
    #[arg(long)]
    n: usize,
    #[arg(long, allow_negative_numbers = true)]
    w: i8,
    #[arg(long, allow_negative_numbers = true)]
    z: i8,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Verify {
    /// Generic transfer kernels against the closed-form prediction.
    Theorem1 {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Defining relations and power-commutator identities.
    Lemma1 {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Discriminant tables in a data directory.
    Tables {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Field {
    /// Class group and 3-Sylow subgroup of Q(sqrt d).
    Cl3 {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        json: bool,
    },
    /// Fundamental discriminants in a range with their 3-class groups.
    Scan {
        #[arg(long)]
        min: i64,
        #[arg(long)]
        max: i64,
        /// Only discriminants with 3-rank at least 2.
        #[arg(long)]
        rank2_only: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Dot,
    Json,
}

enum Failure {
    Mismatch,
    Usage(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

type Outcome = Result<(), Failure>;

struct Fmt {
    log: bool,
}

impl Fmt {
    fn inv(&self, a: &AbelianInvariants) -> String {
        if self.log {
            a.log_notation(3)
        } else {
            a.to_string()
        }
    }

    fn invs(&self, list: &[AbelianInvariants]) -> String {
        let parts: Vec<String> = list.iter().map(|a| self.inv(a)).collect();
        format!("[{}]", parts.join(", "))
    }

    fn inv_json(&self, a: &AbelianInvariants) -> Value {
        if self.log {
            json!(a.log_notation(3))
        } else {
            json!(a.factors())
        }
    }
}

fn tuple<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn enum_bound() -> Result<usize, Failure> {
    match std::env::var("PCT_ENUM_BOUND") {
        Ok(s) => s.trim().parse().map_err(|_| {
            Failure::Usage(Error::Contract(format!("PCT_ENUM_BOUND must be a positive integer, got {s:?}")))
        }),
        Err(_) => Ok(DEFAULT_ENUM_BOUND),
    }
}

fn check_bound(n: usize) -> Result<(), Failure> {
    let bound = enum_bound()?;
    if n > bound {
        return Err(Error::Capacity { n, bound }.into());
    }
    Ok(())
}

fn group(args: &GroupArgs, f: &Fmt) -> Outcome {
    let p = GroupParams::new(args.a, args.n, args.w, args.z)?;
    check_bound(p.n)?;
    let g = PcGroup::build(p)?.with_enum_bound(enum_bound()?);
    let analysis = analyze(&g)?;
    let ap = &analysis.pattern;
    let (label, _) = type_label(&p)?;
    let class = g.nilpotency_class();
    let chi2 = g.two_step_centralizer().index();
    let id = smallgroups_label(&p);
    if args.json {
        print_json(&json!({
            "params": {"a": p.a, "n": p.n, "w": p.w, "z": p.z},
            "name": p.to_string(),
            "order": g.order(),
            "class": class,
            "coclass": p.n - class,
            "type": label.to_string(),
            "tau": ap.tau.iter().map(|t| f.inv_json(t)).collect::<Vec<_>>(),
            "kappa_s": ap.kappa_s,
            "kappa_d_orders": ap.kappa_d_orders,
            "kappa_d_structures": ap.kappa_d_structures.iter().map(|t| f.inv_json(t)).collect::<Vec<_>>(),
            "chi2_index": chi2,
            "smallgroups_id": id,
        }));
    } else {
        println!("group        {p}");
        println!("order        {} = 3^{}", g.order(), p.n);
        println!("class        {class}");
        println!("coclass      {}", p.n - class);
        println!("type         {label}");
        println!("tau          {}", f.invs(&ap.tau));
        println!("kappa_s      {}", tuple(&ap.kappa_s));
        println!("kappa_d      {}", tuple(&ap.kappa_d_orders));
        println!("ker T_i      {}", f.invs(&ap.kappa_d_structures));
        println!("chi_2 index  {chi2}");
        if let Some(id) = id {
            let mark = if id.provisional { " (provisional)" } else { "" };
            println!("smallgroups  {id}{mark}");
        }
    }
    Ok(())
}

fn theorem1(nmax: usize, as_json: bool, f: &Fmt) -> Outcome {
    check_bound(nmax)?;
    let report = verify_theorem1(nmax)?;
    if as_json {
        let rows: Vec<Value> = report
            .entries
            .iter()
            .map(|e| {
                json!({
                    "params": e.params.to_string(),
                    "kappa_s": e.kappa_s,
                    "kappa_d_orders": e.kappa_d_orders,
                    "kappa_d_structures": e.kappa_d_structures.iter().map(|t| f.inv_json(t)).collect::<Vec<_>>(),
                    "predicted": {
                        "type": e.predicted.type_label.to_string(),
                        "kappa_s": e.predicted.kappa_s,
                        "kappa_d_orders": e.predicted.kappa_d_orders,
                        "kappa_d_structures": e.predicted.kappa_d_structures().iter().map(|t| f.inv_json(t)).collect::<Vec<_>>(),
                    },
                    "match": e.matches,
                })
            })
            .collect();
        print_json(&json!({"n_max": nmax, "rows": rows, "mismatches": report.mismatches}));
    } else {
        println!("{:<14} {:<6} {:<11} {:<13} {:<28} match", "group", "type", "kappa_s", "kappa_d", "kernels");
        for e in &report.entries {
            println!(
                "{:<14} {:<6} {:<11} {:<13} {:<28} {}",
                e.params.to_string(),
                e.predicted.type_label.to_string(),
                tuple(&e.kappa_s),
                tuple(&e.kappa_d_orders),
                f.invs(&e.kappa_d_structures),
                if e.matches { "yes" } else { "NO" }
            );
        }
        for m in &report.mismatches {
            println!("mismatch: {m}");
        }
        println!("{} groups, {} mismatches", report.entries.len(), report.mismatches.len());
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn lemma1(nmax: usize, as_json: bool) -> Outcome {
    check_bound(nmax)?;
    let checks = verify_lemma1(nmax)?;
    let ok = checks.iter().all(|c| c.passed());
    if as_json {
        let rows: Vec<Value> = checks
            .iter()
            .map(|c| {
                json!({
                    "params": c.group.to_string(),
                    "presentation": c.presentation,
                    "general": c.general,
                    "specialized": c.specialized,
                    "passed": c.passed(),
                })
            })
            .collect();
        print_json(&json!({"n_max": nmax, "rows": rows, "passed": ok}));
    } else {
        for c in &checks {
            println!(
                "{:<14} relations {:<5} general {:?} specialized {:?}",
                c.group.to_string(),
                c.presentation,
                c.general,
                c.specialized
            );
        }
        println!("{} groups, {}", checks.len(), if ok { "all identities hold" } else { "FAILURES" });
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn tables(dir: &Path, as_json: bool) -> Outcome {
    let report = verify_tables(dir);
    if as_json {
        print_json(&serde_json::to_value(&report).expect("report serializes"));
    } else {
        for p in &report.problems {
            println!("error: {p}");
        }
        for t in &report.tables {
            let passed = t.rows.iter().filter(|r| r.passed).count();
            println!("{}: {}/{} rows pass", t.name, passed, t.rows.len());
            if let Some(tally) = &t.tally {
                let shares: Vec<String> = tally
                    .shares
                    .iter()
                    .map(|(i, s)| format!("<729,{i}> {} ({s:.1}%)", tally.counts[i]))
                    .collect();
                println!(
                    "  tally over {} determined rows: {}; within tolerance: {}",
                    tally.determined,
                    shares.join(", "),
                    tally.within_tolerance
                );
            }
            for p in &t.problems {
                println!("  problem: {p}");
            }
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn identify(e: u32, kappa_d: &[u64], ordered: bool, as_json: bool) -> Outcome {
    let k: [u64; 4] = kappa_d
        .try_into()
        .map_err(|_| Error::Contract("kappa-d needs exactly four entries".into()))?;
    let mode = if ordered { ComparisonMode::Ordered } else { ComparisonMode::Multiset };
    let p = identify_tower_group(e, &k, mode)?;
    let id = smallgroups_label(&p);
    if as_json {
        print_json(&json!({
            "params": {"a": p.a, "n": p.n, "w": p.w, "z": p.z},
            "name": p.to_string(),
            "smallgroups_id": id,
        }));
    } else {
        match id {
            Some(id) => println!("{p} / {id}"),
            None => println!("{p}"),
        }
    }
    Ok(())
}

fn cl3(d: i64, as_json: bool, f: &Fmt) -> Outcome {
    let info = class_group(d)?;
    if as_json {
        print_json(&json!({
            "d": info.d,
            "class_number": info.class_number,
            "invariants": f.inv_json(&info.invariants),
            "sylow3": f.inv_json(&info.sylow3),
        }));
    } else {
        let trivial = if info.invariants.is_trivial() { " (trivial)" } else { "" };
        println!("d            {d}");
        println!("narrow h     {}", info.class_number);
        println!("invariants   {}{trivial}", info.invariants);
        println!("3-Sylow      {}", f.inv(&info.sylow3));
    }
    Ok(())
}

fn field_scan(min: i64, max: i64, rank2_only: bool, as_json: bool, f: &Fmt) -> Outcome {
    if min < 2 || max < min || max > 100_000_000 {
        return Err(Error::Contract("scan needs 2 <= min <= max <= 10^8".into()).into());
    }
    let entries = scan_chunked(min, max, if rank2_only { 2 } else { 0 }, DEFAULT_CHUNK)?;
    if as_json {
        let rows: Vec<Value> = entries
            .iter()
            .map(|e| json!({"d": e.d, "class_number": e.class_number, "sylow3": f.inv_json(&e.sylow3)}))
            .collect();
        print_json(&json!({"min": min, "max": max, "rank2_only": rank2_only, "rows": rows}));
    } else {
        for e in &entries {
            println!("{:>10}  h+={:<6} {}", e.d, e.class_number, f.inv(&e.sylow3));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let f = Fmt { log: cli.log_invariants };
    match cli.command {
        Command::Group(args) => group(&args, &f),
        Command::Verify(Verify::Theorem1 { nmax, json }) => theorem1(nmax, json, &f),
        Command::Verify(Verify::Lemma1 { nmax, json }) => lemma1(nmax, json),
        Command::Verify(Verify::Tables { data, json }) => tables(&data, json),
        Command::Tree { nmax, format } => {
            let tree = build_tree(nmax)?;
            match format {
                TreeFormat::Dot => print!("{}", tree.to_dot()),
                TreeFormat::Json => print_json(&tree.to_json()),
            }
            Ok(())
        }
        Command::Identify { e, kappa_d, ordered, json } => identify(e, &kappa_d, ordered, json),
        Command::Field(Field::Cl3 { d, json }) => cl3(d, json, &f),
        Command::Field(Field::Scan { min, max, rank2_only, json }) => {
            field_scan(min, max, rank2_only, json, &f)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
