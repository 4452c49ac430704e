//! `secant`: command-line front end for the verification suites and table
//! generators of `secant-core`.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use secant_core::cumulant::{self, Coords};
use secant_core::minuscule::{verify_identities, MinusculeFamily, Pairing};
use secant_core::plethysm::{compare_s3_wedge, s3_wedge_dimension_check, s3_wedge_table};
use secant_core::report::{all_passed, Check, Status};
use secant_core::secant::{self, cubic, hwv, orbit};
use secant_core::IsotypicTable;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "secant", version, about = "Exact verification of secant and tangential varieties of Grassmannians and spinor varieties")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random sample.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for independent checks (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plethysm tables.
    #[command(subcommand)]
    Plethysm(PlethysmCmd),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Cumulant coordinate changes and the secant in each system.
    #[command(subcommand)]
    Cumulant(CumulantCmd),
    /// Degree-d piece of the ideal of the s-th secant of G(k,n).
    Ideal(IdealArgs),
    /// Cubic equations of the secant of G(k,n): ideal and quotient tables.
    Cubics(CubicsArgs),
    /// Highest weight cubic of weight (2k,k) (columns).
    Hwv(HwvArgs),
    /// Multiplicity in the coordinate ring of the open orbit.
    OrbitRing(OrbitArgs),
}

#[derive(Subcommand)]
enum PlethysmCmd {
    /// S^3(wedge^k): closed form against the character oracle.
    S3Wedge {
        #[arg(long)]
        k: u32,
        /// dim V for the dimension identity.
        #[arg(long)]
        dim: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PairingArg {
    Sorted,
    Alternative,
}

impl From<PairingArg> for Pairing {
    fn from(p: PairingArg) -> Self {
        match p {
            PairingArg::Sorted => Pairing::Sorted,
            PairingArg::Alternative => Pairing::Alternative,
        }
    }
}

#[derive(Args)]
struct FamilyArgs {
    /// A:k,n or D:n; may be repeated.
    #[arg(long = "family", required = true)]
    families: Vec<MinusculeFamily>,
    #[arg(long, value_enum, default_value = "sorted")]
    pairing: PairingArg,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Root expansion, sum rule, Laplace rule and multiplicativity.
    Identities {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// The secant in y and z coordinates against the closed forms.
    SecantLemmas {
        #[command(flatten)]
        fam: FamilyArgs,
    },
    /// The tangent limit in z coordinates.
    Tangent {
        #[command(flatten)]
        fam: FamilyArgs,
    },
    /// Sampled secant points lie on the cone over the determinant variety.
    MainTheorem {
        #[arg(long = "family", required = true)]
        families: Vec<MinusculeFamily>,
        #[arg(long, default_value_t = 25)]
        samples: usize,
    },
    /// Plücker quadrics in z pull back to Pfaffians, for A:2,n.
    PfaffianPluecker {
        #[arg(long)]
        n: u32,
        /// Only the chart x_12 = 1.
        #[arg(long)]
        first_chart: bool,
    },
}

#[derive(Subcommand)]
enum CumulantCmd {
    /// The change of coordinates from x and the secant parametrization.
    Show {
        #[arg(long)]
        family: MinusculeFamily,
        #[arg(long, default_value = "z")]
        coords: Coords,
        #[arg(long, value_enum, default_value = "sorted")]
        pairing: PairingArg,
    },
}

#[derive(Args)]
struct IdealArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 2)]
    s: u32,
    #[arg(long)]
    d: u32,
    /// Include the basis polynomials in the output.
    #[arg(long)]
    basis: bool,
    /// Skip the isotypic decomposition.
    #[arg(long)]
    no_table: bool,
}

#[derive(Args)]
struct CubicsArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    n: u32,
    /// Also compute the cubic ideal by evaluation and compare dimensions.
    #[arg(long)]
    compute: bool,
}

#[derive(Args)]
struct HwvArgs {
    #[arg(long)]
    k: u32,
    /// Run the highest-weight checks.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long)]
    k: u32,
    /// Weakly decreasing integers of length 2k, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Vec<i64>,
}

/// What a command produced: checks, structured payload, text rendering.
struct Output {
    checks: Vec<Check>,
    payload: Map<String, Value>,
    text: String,
}

impl Output {
    fn new() -> Self {
        Output { checks: Vec::new(), payload: Map::new(), text: String::new() }
    }

    fn put(&mut self, key: &str, value: impl serde::Serialize) {
        self.payload.insert(key.to_string(), serde_json::to_value(value).expect("payload serializes"));
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

fn table_text(t: &IsotypicTable) -> String {
    let rows: Vec<(String, u64)> = t.iter().map(|(p, m)| (p.to_string(), m)).collect();
    let width = rows.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
    let mut s = format!("{} ({:?} convention)\n", t.ambient(), t.convention());
    for (p, m) in rows {
        s.push_str(&format!("  {p:<width$}  {m}\n"));
    }
    s
}

fn par_families<T: Send>(
    families: &[MinusculeFamily],
    f: impl Fn(&MinusculeFamily) -> secant_core::Result<T> + Sync,
) -> anyhow::Result<Vec<T>> {
    Ok(families.par_iter().map(&f).collect::<secant_core::Result<Vec<T>>>()?)
}

fn check_families(
    families: &[MinusculeFamily],
    f: impl Fn(&MinusculeFamily) -> secant_core::Result<Vec<Check>> + Sync,
) -> anyhow::Result<Output> {
    let mut out = Output::new();
    let per = par_families(families, f)?;
    out.put("families", families);
    for (fam, checks) in families.iter().zip(per) {
        out.line(format!("{fam}: {}/{} checks pass", checks.iter().filter(|c| c.passed()).count(), checks.len()));
        out.checks.extend(checks);
    }
    Ok(out)
}

fn plethysm(cmd: PlethysmCmd) -> anyhow::Result<Output> {
    let PlethysmCmd::S3Wedge { k, dim } = cmd;
    let mut out = Output::new();
    let rows = compare_s3_wedge(k)?;
    out.line(format!("S^3(wedge^{k}) in column convention"));
    out.line(format!("  {:<12} {:>11} {:>7} {:>6}", "columns", "closed form", "oracle", "agree"));
    for r in &rows {
        if r.closed_form == 0 && r.oracle == 0 {
            continue;
        }
        out.line(format!("  {:<12} {:>11} {:>7} {:>6}", r.columns.to_string(), r.closed_form, r.oracle, r.agree));
        if !r.agree {
            out.checks.push(Check::flagged(
                "closed form vs oracle",
                r.columns.to_string(),
                format!("closed form {}, oracle {}", r.closed_form, r.oracle),
            ));
        }
    }
    let (lhs, rhs) = s3_wedge_dimension_check(&s3_wedge_table(k), k, dim);
    out.line(format!("sum of mult * dim at dim V = {dim}: {lhs}, dim S^3(wedge^{k}) = {rhs}"));
    out.checks.push(Check::new("dimension identity", format!("k={k} dim={dim}"), lhs == rhs));
    out.put("k", k);
    out.put("dim", dim);
    out.put("rows", rows.iter().filter(|r| r.closed_form > 0 || r.oracle > 0).collect::<Vec<_>>());
    out.put("dimension", json!({ "table": lhs.to_string(), "s3": rhs.to_string() }));
    Ok(out)
}

fn verify(cmd: VerifyCmd, seed: u64) -> anyhow::Result<Output> {
    match cmd {
        VerifyCmd::Identities { fam, samples } => {
            let pairing = fam.pairing.into();
            check_families(&fam.families, |f| verify_identities(f, pairing, samples, seed))
        }
        VerifyCmd::SecantLemmas { fam } => {
            let pairing = fam.pairing.into();
            check_families(&fam.families, |f| cumulant::verify_secant_lemmas(f, pairing))
        }
        VerifyCmd::Tangent { fam } => {
            let pairing = fam.pairing.into();
            let mut out = check_families(&fam.families, |f| cumulant::verify_tangent_limit(f, pairing))?;
            out.put("constant", cumulant::tangent_constant());
            out.put("scale", 2);
            out.line(format!("z_w = {} det_w(2 n) for deg w >= 2", cumulant::tangent_constant()));
            Ok(out)
        }
        VerifyCmd::MainTheorem { families, samples } => {
            let reports = par_families(&families, |f| cumulant::verify_main_theorem(f, samples, seed))?;
            let mut out = Output::new();
            for r in &reports {
                out.line(format!("{}: {} samples, sign {}", r.family, r.samples, r.resolved_sign));
                out.checks.extend(r.checks.iter().cloned());
            }
            out.put("reports", &reports);
            Ok(out)
        }
        VerifyCmd::PfaffianPluecker { n, first_chart } => {
            let cases = cumulant::verify_pfaffian_pluecker(n, !first_chart)?;
            let mut out = Output::new();
            for c in &cases {
                let subject = format!("chart {:?} quadric {:?}", c.chart, c.quadric);
                let note = c.sign.map_or("no sign".to_string(), |s| format!("sign {s}"));
                out.checks.push(Check::new("pull-back is +-Pf", &subject, c.sign.is_some() && c.homogeneous).with_note(note));
            }
            out.line(format!("n={n}: {} index choices", cases.len()));
            out.put("n", n);
            out.put("cases", &cases);
            Ok(out)
        }
    }
}

fn cumulant_show(cmd: CumulantCmd) -> anyhow::Result<Output> {
    let CumulantCmd::Show { family, coords, pairing } = cmd;
    let pairing: Pairing = pairing.into();
    let map = match coords {
        Coords::X => cumulant::CoordinateMap::identity(family, "x", "x"),
        Coords::Y => cumulant::x_to_y(&family, pairing)?,
        Coords::Z => cumulant::x_to_z(&family, pairing)?,
    };
    let secant = cumulant::secant_in_coords(&family, coords, pairing)?;
    let mut out = Output::new();
    out.line(format!("{family}: {} in terms of x", coords.name()));
    let mut change = BTreeMap::new();
    for (w, p) in map.images() {
        out.line(format!("  {}{w} = {}", coords.name(), p.to_text()));
        change.insert(w.to_string(), p.to_text());
    }
    out.line(format!("secant t exp(a) + (1-t) exp(b) in {}", coords.name()));
    let mut sec = BTreeMap::new();
    for (w, p) in &secant {
        out.line(format!("  {}{w} = {}", coords.name(), p.to_text()));
        sec.insert(w.to_string(), p.to_text());
    }
    out.put("family", family);
    out.put("coords", coords);
    out.put("change", change);
    out.put("secant", sec);
    Ok(out)
}

fn ideal(a: IdealArgs, seed: u64) -> anyhow::Result<Output> {
    let piece = secant::ideal_degree_d(a.k, a.n, a.s, a.d, seed)?;
    let mut out = Output::new();
    out.line(format!(
        "I_{}(sigma_{}(G({},{}))): dimension {} of {} monomials ({} sample points)",
        a.d,
        a.s,
        a.k,
        a.n,
        piece.dimension(),
        piece.ambient_dimension,
        piece.samples
    ));
    let points = secant::ideal::secant_points(a.k, a.n, a.s, 20, seed.wrapping_add(1));
    let vanish = piece.basis.iter().all(|p| points.iter().all(|x| p.eval(x).is_ok_and(|v| v.is_zero())));
    out.checks.push(Check::new("basis vanishes on held-out secant points", format!("{} points", points.len()), vanish));
    if a.d <= a.s {
        out.checks.push(Check::new("no forms of degree <= s", format!("d={} s={}", a.d, a.s), piece.dimension() == 0));
    }
    out.put("k", a.k);
    out.put("n", a.n);
    out.put("s", a.s);
    out.put("d", a.d);
    out.put("dimension", piece.dimension());
    out.put("ambient_dimension", piece.ambient_dimension);
    out.put("samples", piece.samples);
    if !a.no_table {
        let table = secant::ideal_multiplicities(a.k, a.n, a.s, a.d, seed)?;
        out.text.push_str(&table_text(&table));
        out.put("multiplicities", &table);
    }
    if a.basis {
        for p in &piece.basis {
            out.line(format!("  {}", p.to_text()));
        }
        out.put("basis", piece.basis.iter().map(|p| p.to_text()).collect::<Vec<_>>());
    }
    Ok(out)
}

fn cubics(a: CubicsArgs, seed: u64) -> anyhow::Result<Output> {
    let (table, _) = cubic::cubic_ideal_table(a.k, a.n)?;
    let q = cubic::quotient_degree3(a.k, a.n)?;
    let mut out = Output::new();
    out.checks = cubic::cubic_consistency(a.k, a.n)?;
    out.text.push_str(&table_text(&table));
    out.text.push_str(&table_text(&q.absent_dropped));
    let matching = q.matching(q.ideal_dimension);
    out.line(format!(
        "dim S^3 = {}, dim I_3 = {}, quotient readings: literal {}, absent-dropped {}; consistent: {:?}",
        q.s3_dimension, q.ideal_dimension, q.literal_dimension, q.absent_dropped_dimension, matching
    ));
    out.checks.push(Check::new(
        "dim I_3 + dim quotient = dim S^3",
        format!("k={} n={}", a.k, a.n),
        !matching.is_empty(),
    ));
    if a.compute {
        let dim = secant::ideal_degree_d(a.k, a.n, 2, 3, seed)?.dimension();
        out.line(format!("computed dim I_3 = {dim}"));
        out.checks.push(Check::new("closed form vs computed ideal", format!("k={} n={}", a.k, a.n), dim as u128 == q.ideal_dimension));
        out.put("computed_dimension", dim);
    }
    out.put("k", a.k);
    out.put("n", a.n);
    out.put("ideal", &table);
    out.put("quotient", &q);
    out.put("matching_readings", matching);
    Ok(out)
}

fn hwv_cmd(a: HwvArgs) -> anyhow::Result<Output> {
    let p = hwv::hwv(a.k)?;
    let mut out = Output::new();
    out.line(format!("k={}: {} terms", a.k, p.len()));
    out.line(format!("  {}", p.to_text()));
    out.put("k", a.k);
    out.put("polynomial", p.to_text());
    if a.check {
        let r = hwv::check_hwv(a.k)?;
        out.line(format!("P(Q) = {}", r.value_at_q));
        out.put("value_at_q", &r.value_at_q);
        out.put("weight_columns", &r.weight_columns);
        out.checks = r.checks;
    }
    Ok(out)
}

fn orbit_ring(a: OrbitArgs) -> anyhow::Result<Output> {
    let c = orbit::compare_orbit_ring(&a.alpha, a.k)?;
    let mut out = Output::new();
    let subject = format!("alpha={:?}", a.alpha);
    out.line(format!("multiplicity {} (invariant count {}, tensor count {:?})", c.formula, c.oracle, c.crucial));
    out.checks.push(Check::new("formula vs invariant count", &subject, c.formula == c.oracle));
    if let Some(m) = c.crucial {
        out.checks.push(Check::new("formula vs tensor count", &subject, m == c.formula));
    }
    out.put("k", a.k);
    out.put("comparison", &c);
    Ok(out)
}

fn dispatch(cli: Cli) -> anyhow::Result<Output> {
    match cli.command {
        Command::Plethysm(c) => plethysm(c),
        Command::Verify(c) => verify(c, cli.seed),
        Command::Cumulant(c) => cumulant_show(c),
        Command::Ideal(a) => ideal(a, cli.seed),
        Command::Cubics(a) => cubics(a, cli.seed),
        Command::Hwv(a) => hwv_cmd(a),
        Command::OrbitRing(a) => orbit_ring(a),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let json = cli.json;
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let out = match dispatch(cli).context("command failed") {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let passed = all_passed(&out.checks);
    if json {
        let mut report = Map::new();
        report.insert("schema".into(), json!(1));
        report.insert("command".into(), json!(argv));
        report.insert("status".into(), json!(if passed { "pass" } else { "fail" }));
        report.insert("checks".into(), serde_json::to_value(&out.checks).expect("checks serialize"));
        for (k, v) in out.payload {
            report.insert(k, v);
        }
        println!("{}", serde_json::to_string_pretty(&Value::Object(report)).expect("report serializes"));
    } else {
        print!("{}", out.text);
        for c in out.checks.iter().filter(|c| c.status != Status::Pass) {
            println!("{c}");
        }
        let count = |s: Status| out.checks.iter().filter(|c| c.status == s).count();
        println!(
            "{}: {} passed, {} failed, {} flagged ({:.2?})",
            if passed { "PASS" } else { "FAIL" },
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Flagged),
            start.elapsed()
        );
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
