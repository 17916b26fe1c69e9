//! Command-line front end: parses curve files, dispatches to the exact
//! computational library, and emits deterministic key/value reports.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse or usage error.

pub mod format;
pub mod report;

use clap::{Args, Parser, Subcommand};
use fibkit_core::curve5::{normalize, NormalizeError, PointedCurve5};
use fibkit_core::divisors::{
    bn_divisor_numerology, class_eval, lefschetz_profile, logan_relation_check, pullback_solve,
    ray_collinear, DivisorClass, DivisorError, PicXClass, TestCurveProfile,
};
use fibkit_core::exact::rat::{parse_rat, rat, rat_str, Rat};
use fibkit_core::genus6::{
    blow_down_sets, d6_membership, neg_curves, phi6, Genus6Error, PointedCurve6, QuinticDP,
    SurfacePoint,
};
use fibkit_core::git::{
    conjugate_refutation, flat_limit, mu, plucker_coordinates, plucker_states, torus_classify,
    torus_rescale, GitError, Linearization, OnePS, Stability,
};
use fibkit_core::phi5::{
    blowup_four_points, cross_ratio, detect_bn_divisors, phi5_closed_form, residual_curve,
    surface_and_hyperplane, Phi5Error,
};
use format::{parse_curve_file, print_curve5, CurveFile, ParseError};
use report::Report;

pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub exit: i32,
}

impl CliError {
    fn domain(code: &'static str, message: impl ToString) -> Self {
        CliError {
            code,
            message: message.to_string(),
            exit: 1,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError {
            code: "parse-error",
            message: e.to_string(),
            exit: 2,
        }
    }
}

impl From<NormalizeError> for CliError {
    fn from(e: NormalizeError) -> Self {
        CliError::domain("genericity-failure", e)
    }
}

impl From<Phi5Error> for CliError {
    fn from(e: Phi5Error) -> Self {
        let code = match &e {
            Phi5Error::Normalize(_) => "genericity-failure",
            Phi5Error::Elimination { .. } => "elimination-failure",
            Phi5Error::Degenerate { .. } => "degenerate-configuration",
        };
        CliError::domain(code, e)
    }
}

impl From<GitError> for CliError {
    fn from(e: GitError) -> Self {
        let code = match &e {
            GitError::InvalidOnePS => "invalid-one-ps",
            GitError::InvalidLinearization => "invalid-linearization",
            GitError::ShapeMismatch(_) => "shape-mismatch",
            GitError::LimitNotInX => "limit-not-in-x",
        };
        CliError::domain(code, e)
    }
}

impl From<DivisorError> for CliError {
    fn from(e: DivisorError) -> Self {
        let code = match &e {
            DivisorError::InvalidGenus => "invalid-genus",
            DivisorError::NonIntegralLambda { .. } => "non-integral-lambda",
            DivisorError::MalformedSequence(_) => "malformed-sequence",
        };
        CliError::domain(code, e)
    }
}

impl From<Genus6Error> for CliError {
    fn from(e: Genus6Error) -> Self {
        let code = match &e {
            Genus6Error::GeneralPositionFailure(_) => "general-position-failure",
            Genus6Error::BasePointInput => "base-point-input",
            Genus6Error::Invalid(_) => "invalid-input",
        };
        CliError::domain(code, e)
    }
}

#[derive(Parser)]
#[command(
    name = "fibkit",
    about = "Exact computations for pointed canonical curves: normal forms, cross-ratio images, torus stability, divisor arithmetic, del Pezzo combinatorics",
    version
)]
pub struct Cli {
    /// Emit the report as JSON instead of key/value lines.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check a curve file: net independence, incidence, smoothness at the
    /// marked point (genus 5) or general position, double points, and
    /// incidence (genus 6).
    Validate { file: String },
    /// Image of a pointed genus-5 curve in the moduli of 4-pointed
    /// rational curves.
    Phi5(Phi5Args),
    /// Torus weight systems, stability, flat limits, and canonical orbit
    /// representatives.
    Git(GitArgs),
    /// Divisor-class arithmetic and pointed Brill-Noether numerology.
    Divisors {
        #[command(subcommand)]
        sub: DivisorsCommand,
    },
    /// Quintic del Pezzo computations for pointed genus-6 curves.
    G6 {
        #[command(subcommand)]
        sub: G6Command,
    },
}

#[derive(Args)]
pub struct Phi5Args {
    pub file: String,
    /// Only the closed-form coefficient ratio.
    #[arg(long, conflicts_with_all = ["blowup", "both"])]
    pub closed_form: bool,
    /// Only the symbolic double blow-up.
    #[arg(long, conflicts_with = "both")]
    pub blowup: bool,
    /// Both routes plus a match verdict (the default).
    #[arg(long)]
    pub both: bool,
}

#[derive(Args)]
pub struct GitArgs {
    pub file: String,
    /// Linearization degrees `a b` on the point and net factors.
    #[arg(long, num_args = 2, value_names = ["A", "B"], default_values = ["3", "2"])]
    pub linearization: Vec<u32>,
    /// One-parameter subgroup weights (five integers summing to zero).
    #[arg(long, num_args = 5, allow_negative_numbers = true, value_names = ["W0", "W1", "W2", "W3", "W4"])]
    pub lambda: Option<Vec<i64>>,
    /// Classify with respect to the standard maximal torus.
    #[arg(long)]
    pub classify: bool,
    /// Compute the flat limit under the subgroup (requires --lambda).
    #[arg(long)]
    pub flat_limit: bool,
    /// Rescale a flat-limit-shaped net to its canonical representative.
    #[arg(long)]
    pub rescale: bool,
    /// Heuristic full-group refutation: also classify this many
    /// pseudorandom conjugate frames.
    #[arg(long, value_name = "N")]
    pub conjugates: Option<u32>,
}

#[derive(Subcommand)]
pub enum DivisorsCommand {
    /// Invariants of a nodal pencil: chi, delta_0, K^2, kappa, lambda,
    /// omega, and the Weierstrass pairing.
    Pencil {
        chi_surface: i64,
        #[arg(allow_negative_numbers = true)]
        k2_surface: i64,
        fiber_genus: i64,
        base_points: i64,
    },
    /// Evaluate named classes against named test-curve profiles, solve
    /// class coordinates from pairings, and check the additivity relation.
    Classes(ClassesArgs),
    /// Ramification weight and divisor condition for a degree-d series of
    /// dimension r with the given vanishing sequence.
    Numerology {
        genus: i64,
        r: i64,
        d: i64,
        /// Comma-separated strictly increasing vanishing orders, e.g. 0,5
        sequence: String,
    },
}

#[derive(Args)]
pub struct ClassesArgs {
    /// Evaluate: class name (W) against a profile name (F1 | F2).
    #[arg(long, num_args = 2, value_names = ["CLASS", "PROFILE"])]
    pub eval: Option<Vec<String>>,
    /// Solve O(m,n) from the two pairings `d1 d2` and compare with O(3,2).
    #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["D1", "D2"])]
    pub pullback: Option<Vec<String>>,
    /// Check additivity: four rationals `bn3_f1 bn3_f2 bn4_f1 bn4_f2`.
    #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["BN3_F1", "BN3_F2", "BN4_F1", "BN4_F2"])]
    pub logan: Option<Vec<String>>,
}

#[derive(Subcommand)]
pub enum G6Command {
    /// List the ten (-1)-curves and the five blow-down sets.
    Curves { file: String },
    /// Does the marked point map to a node under one of the five
    /// degree-6 nets?
    D6 { file: String },
    /// The 5-point configuration carried by the conic through the base
    /// points and the marked point.
    Phi6 { file: String },
}

pub fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Phi5(args) => cmd_phi5(args),
        Command::Git(args) => cmd_git(args),
        Command::Divisors { sub } => cmd_divisors(sub),
        Command::G6 { sub } => cmd_g6(sub),
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::domain("io-error", format!("cannot read `{path}`: {e}")))
}

fn load(path: &str) -> Result<CurveFile, CliError> {
    Ok(parse_curve_file(&read_file(path)?)?)
}

fn load_genus5(path: &str) -> Result<PointedCurve5, CliError> {
    match load(path)? {
        CurveFile::Genus5(c) => Ok(c),
        CurveFile::Genus6 { .. } => Err(CliError::domain(
            "wrong-record-type",
            "expected a genus-5 record",
        )),
    }
}

fn load_genus6(path: &str) -> Result<PointedCurve6, CliError> {
    match load(path)? {
        CurveFile::Genus6 {
            base,
            sextic,
            point,
        } => {
            let surface = QuinticDP::new(base)?;
            // a marked point equal to a base point is rejected up front;
            // exceptional-curve points are a library-level input
            Ok(PointedCurve6 {
                surface,
                sextic,
                point: SurfacePoint::Plane(point),
            })
        }
        CurveFile::Genus5(_) => Err(CliError::domain(
            "wrong-record-type",
            "expected a genus-6 record",
        )),
    }
}

fn check(report: &mut Report, name: &str, ok: bool) -> bool {
    report.push(&format!("check.{name}"), if ok { "pass" } else { "fail" });
    ok
}

fn cmd_validate(path: &str) -> Result<Report, CliError> {
    let mut report = Report::new();
    match load(path)? {
        CurveFile::Genus5(curve) => {
            report.push("record", "curve5");
            let v = curve.validate();
            let mut all = true;
            all &= check(&mut report, "net-independence", v.net_independent);
            all &= check(&mut report, "point-incidence", v.point_on_net);
            all &= check(&mut report, "smooth-at-point", v.smooth_at_point);
            report.push("result", if all { "pass" } else { "fail" });
            if !all {
                return Err(CliError::domain(
                    "validation-failure",
                    v.first_failure().unwrap_or("validation failed"),
                ));
            }
        }
        CurveFile::Genus6 {
            base,
            sextic,
            point,
        } => {
            report.push("record", "curve6");
            let surface = match QuinticDP::new(base) {
                Ok(s) => s,
                Err(e) => {
                    check(&mut report, "general-position", false);
                    report.push("result", "fail");
                    let _ = report;
                    return Err(e.into());
                }
            };
            check(&mut report, "general-position", true);
            let curve = PointedCurve6 {
                surface,
                sextic,
                point: SurfacePoint::Plane(point),
            };
            let v = curve.validate();
            let mut all = true;
            all &= check(&mut report, "sextic-degree", v.sextic_is_degree6);
            all &= check(
                &mut report,
                "double-at-base-points",
                v.double_at_base_points,
            );
            all &= check(&mut report, "point-incidence", v.point_on_curve);
            report.push("result", if all { "pass" } else { "fail" });
            if !all {
                return Err(CliError::domain(
                    "validation-failure",
                    "curve checks failed",
                ));
            }
        }
    }
    Ok(report)
}

fn cmd_phi5(args: Phi5Args) -> Result<Report, CliError> {
    let curve = load_genus5(&args.file)?;
    let run_closed = args.closed_form || args.both || !args.blowup;
    let run_blowup = args.blowup || args.both || !args.closed_form;

    let mut report = Report::new();
    let nf = normalize(&curve)?;
    report.push("ratio.a113", rat_str(&nf.coeff(1, 1, 3)));
    report.push("ratio.a122", rat_str(&nf.coeff(1, 2, 2)));
    report.push("ratio.a223", rat_str(&nf.coeff(2, 2, 3)));
    report.block(
        "normal-form",
        print_curve5(&nf.embed())
            .lines()
            .map(str::to_string)
            .collect(),
    );

    let closed = run_closed.then(|| phi5_closed_form(&nf));
    let blowup = if run_blowup {
        let (surface, hyperplane) = surface_and_hyperplane(&nf);
        let germ = residual_curve(&surface, &hyperplane)?;
        let branch =
            fibkit_core::curve5::branch_expand(&nf, fibkit_core::curve5::DEFAULT_BRANCH_ORDER);
        let points = blowup_four_points(&germ, &branch)?;
        report.push("blowup.residual-point", points.residual.to_string());
        report.push("blowup.curve-point", points.curve.to_string());
        Some(cross_ratio(&points))
    } else {
        None
    };
    if let Some(c) = &closed {
        report.push("closed-form", c.to_string());
    }
    if let Some(b) = &blowup {
        report.push("blowup", b.to_string());
    }
    if let (Some(c), Some(b)) = (&closed, &blowup) {
        report.push("match", if c == b { "true" } else { "false" });
    }
    let flags = detect_bn_divisors(&nf)?;
    report.push("detect.weierstrass", flags.weierstrass);
    report.push("detect.bn4-03", flags.bn4_03);
    report.push("detect.bn6-024", flags.bn6_024);
    Ok(report)
}

fn cmd_git(args: GitArgs) -> Result<Report, CliError> {
    let curve = load_genus5(&args.file)?;
    let lin = Linearization::new(args.linearization[0], args.linearization[1])?;
    let lambda = match &args.lambda {
        None => None,
        Some(w) => Some(OnePS::new([w[0], w[1], w[2], w[3], w[4]])?),
    };

    let mut report = Report::new();
    report.push(
        "linearization",
        format!("O({},{})", args.linearization[0], args.linearization[1]),
    );
    let states = plucker_states(&curve, &lin);
    report.push("states", states.len());
    report.push(
        "plucker-coordinates",
        plucker_coordinates(curve.net()).len(),
    );

    if let Some(l) = &lambda {
        let w = l.weights();
        report.push(
            "lambda",
            format!("({},{},{},{},{})", w[0], w[1], w[2], w[3], w[4]),
        );
        report.push("mu", mu(&states, l));
        let point_only = plucker_states(&curve, &Linearization::new(1, 0)?);
        let net_only = plucker_states(&curve, &Linearization::new(0, 1)?);
        report.push("mu.point-factor", mu(&point_only, l));
        report.push("mu.net-factor", mu(&net_only, l));
    }

    if args.classify {
        match torus_classify(&states) {
            Stability::Stable => report.push("classification", "stable"),
            Stability::StrictlySemistable => report.push("classification", "strictly-semistable"),
            Stability::Unstable {
                destabilizer,
                violated_state,
            } => {
                report.push("classification", "unstable");
                let w = destabilizer.weights();
                report.push(
                    "destabilizer",
                    format!("({},{},{},{},{})", w[0], w[1], w[2], w[3], w[4]),
                );
                let s = violated_state;
                report.push(
                    "violated-state",
                    format!("({},{},{},{},{})", s[0], s[1], s[2], s[3], s[4]),
                );
            }
        }
        if let Some(n) = args.conjugates {
            match conjugate_refutation(&curve, &lin, n, 0) {
                Some((attempt, l)) => {
                    let w = l.weights();
                    report.push("conjugate-heuristic", "unstable");
                    report.push("conjugate-heuristic.frame", attempt);
                    report.push(
                        "conjugate-heuristic.destabilizer",
                        format!("({},{},{},{},{})", w[0], w[1], w[2], w[3], w[4]),
                    );
                }
                None => report.push(
                    "conjugate-heuristic",
                    "no refutation found (heuristic only)",
                ),
            }
        }
    }

    let mut limit_curve = None;
    if args.flat_limit {
        let l = lambda.ok_or_else(|| {
            CliError::domain("missing-argument", "--flat-limit requires --lambda")
        })?;
        let limit = flat_limit(&curve, &l)?;
        report.block(
            "flat-limit",
            print_curve5(&limit).lines().map(str::to_string).collect(),
        );
        limit_curve = Some(limit);
    }

    if args.rescale {
        let input = limit_curve.as_ref().unwrap_or(&curve);
        let (canonical, invariant) = torus_rescale(input)?;
        report.block(
            "canonical",
            print_curve5(&canonical)
                .lines()
                .map(str::to_string)
                .collect(),
        );
        report.push("invariant", invariant.to_string());
    }
    Ok(report)
}

fn parse_rat_arg(s: &str) -> Result<Rat, CliError> {
    parse_rat(s).map_err(|m| CliError {
        code: "parse-error",
        message: m,
        exit: 2,
    })
}

fn cmd_divisors(sub: DivisorsCommand) -> Result<Report, CliError> {
    let mut report = Report::new();
    match sub {
        DivisorsCommand::Pencil {
            chi_surface,
            k2_surface,
            fiber_genus,
            base_points,
        } => {
            let data = lefschetz_profile(chi_surface, k2_surface, fiber_genus, base_points)?;
            report.push("chi_tot", data.chi_total);
            report.push("delta_0", data.delta0);
            report.push("K2_tot", data.k2_total);
            report.push("kappa", data.kappa);
            report.push("lambda", data.lambda);
            report.push("omega", data.omega);
            report.push("lambda_relation", "(kappa+delta_0)/12");
            let w = DivisorClass::weierstrass_genus5();
            report.push(
                "weierstrass-dot-pencil",
                rat_str(&class_eval(&w, &data.profile)),
            );
        }
        DivisorsCommand::Classes(args) => {
            let mut acted = false;
            if let Some(eval) = args.eval {
                acted = true;
                let class = match eval[0].as_str() {
                    "W" => DivisorClass::weierstrass_genus5(),
                    other => {
                        return Err(CliError::domain(
                            "unknown-class",
                            format!("unknown class `{other}`; available: W"),
                        ))
                    }
                };
                let profile = match eval[1].as_str() {
                    "F1" => TestCurveProfile::moving_point(5),
                    "F2" => lefschetz_profile(8, 4, 5, 16)?.profile,
                    other => {
                        return Err(CliError::domain(
                            "unknown-profile",
                            format!("unknown profile `{other}`; available: F1, F2"),
                        ))
                    }
                };
                report.push("class", &eval[0]);
                report.push("profile", &eval[1]);
                report.push("value", rat_str(&class_eval(&class, &profile)));
            }
            if let Some(p) = args.pullback {
                acted = true;
                let d1 = parse_rat_arg(&p[0])?;
                let d2 = parse_rat_arg(&p[1])?;
                let class = pullback_solve(&d1, &d2);
                report.push("class", class.to_string());
                let base = PicXClass {
                    point_degree: rat(3),
                    net_degree: rat(2),
                };
                let cmp = ray_collinear(&class, &base);
                report.push("collinear-with-O(3,2)", cmp.collinear);
                if let Some(r) = cmp.ratio {
                    report.push("ratio", rat_str(&r));
                }
            }
            if let Some(l) = args.logan {
                acted = true;
                let vals: Vec<Rat> = l
                    .iter()
                    .map(|s| parse_rat_arg(s))
                    .collect::<Result<_, _>>()?;
                let out = logan_relation_check(
                    &DivisorClass::weierstrass_genus5(),
                    (vals[0].clone(), vals[1].clone()),
                    (vals[2].clone(), vals[3].clone()),
                );
                report.push(
                    "weierstrass-pair",
                    format!(
                        "({},{})",
                        rat_str(&out.weierstrass_pair.0),
                        rat_str(&out.weierstrass_pair.1)
                    ),
                );
                report.push("consistent", out.consistent);
                report.push(
                    "discrepancy",
                    format!(
                        "({},{})",
                        rat_str(&out.discrepancy.0),
                        rat_str(&out.discrepancy.1)
                    ),
                );
            }
            if !acted {
                return Err(CliError::domain(
                    "missing-argument",
                    "classes requires --eval, --pullback, or --logan",
                ));
            }
        }
        DivisorsCommand::Numerology {
            genus,
            r,
            d,
            sequence,
        } => {
            let z: Vec<i64> = sequence
                .split(',')
                .map(|t| {
                    t.trim().parse::<i64>().map_err(|_| CliError {
                        code: "parse-error",
                        message: format!("invalid sequence entry `{t}`"),
                        exit: 2,
                    })
                })
                .collect::<Result<_, _>>()?;
            let out = bn_divisor_numerology(genus, r, d, &z)?;
            report.push("alpha", out.alpha);
            report.push("is_divisor", if out.is_divisor { "yes" } else { "no" });
        }
    }
    Ok(report)
}

fn cmd_g6(sub: G6Command) -> Result<Report, CliError> {
    let mut report = Report::new();
    match sub {
        G6Command::Curves { file } => {
            let curve = load_genus6(&file)?;
            let curves = neg_curves(&curve.surface);
            report.push("count", curves.len());
            let mut lines = Vec::new();
            for c in &curves {
                match &c.line_form {
                    None => lines.push(format!("{}", c.class)),
                    Some(f) => lines.push(format!(
                        "{} : {} {} {}",
                        c.class,
                        rat_str(&f[0]),
                        rat_str(&f[1]),
                        rat_str(&f[2])
                    )),
                }
            }
            report.block("curve", lines);
            let sets = blow_down_sets(&curve.surface);
            report.push("blow-down-sets", sets.len());
            let set_lines = sets
                .iter()
                .map(|set| {
                    set.iter()
                        .map(|&i| format!("{}", curves[i].class))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            report.block("blow-down", set_lines);
        }
        G6Command::D6 { file } => {
            let curve = load_genus6(&file)?;
            let v = curve.validate();
            if !v.passed() {
                return Err(CliError::domain("validation-failure", format!("{v:?}")));
            }
            let out = d6_membership(&curve)?;
            report.push("in_d6", out.in_d6);
            if let Some(w) = out.witness {
                report.push("witness", w.class.to_string());
            }
        }
        G6Command::Phi6 { file } => {
            let curve = load_genus6(&file)?;
            let v = curve.validate();
            if !v.passed() {
                return Err(CliError::domain("validation-failure", format!("{v:?}")));
            }
            let image = phi6(&curve)?;
            report.push("image", image.to_string());
            let membership = d6_membership(&curve)?;
            report.push("boundary", image.is_boundary());
            report.push("in_d6", membership.in_d6);
        }
    }
    Ok(report)
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_impl<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).unwrap()
                );
            } else {
                print!("{}", report.to_text());
            }
            0
        }
        Err(e) => {
            eprintln!("error {}: {}", e.code, e.message);
            e.exit
        }
    }
}
