mod plot;

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use thetalift::hyperbolic::PointH;
use thetalift::lattice::{genus_character, orbit_reps};
use thetalift::lifts::{phi, shimura_coeff, shimura_constant, shintani_coeff, xi_phi_coeff, LiftConfig};
use thetalift::verify::{run_all, run_suite, SuiteConfig};
use thetalift::weilrep::{load_cusp_form, load_input, shadow_coeffs, CuspForm, HarmonicMaassInput};
use thetalift::{DiscriminantPair, Error, Ratio};

#[derive(Parser)]
#[command(name = "thetalift", version, about = "Singular theta lifts, Shimura and Shintani coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Γ₀(N)-orbit representatives of discriminant D in the coset h, with genus-character values.
    #[command(disable_help_flag = true)]
    Orbits {
        #[arg(long, action = clap::ArgAction::Help)]
        help: Option<bool>,
        #[arg(short = 'N', long)]
        level: i64,
        #[arg(short = 'D', long, allow_negative_numbers = true)]
        disc: i64,
        #[arg(short = 'h', long = "coset")]
        coset: i64,
        /// Fundamental discriminant of the genus character.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        delta: i64,
        /// Residue with r² ≡ Δ (mod 4N); defaults to the smallest one.
        #[arg(long)]
        r: Option<i64>,
    },
    /// Evaluate the lift Φ at a point.
    Phi {
        /// Point as `x,y` with y > 0.
        #[arg(short = 'z', allow_hyphen_values = true)]
        z: String,
        /// Harmonic Maass form coefficient file.
        #[arg(short = 'f', long)]
        file: PathBuf,
        /// Largest c⁻ mode used.
        #[arg(long)]
        modes: Option<i64>,
    },
    /// Shimura lift coefficients of the shadow of f.
    Shimura {
        #[arg(short = 'f', long)]
        file: PathBuf,
        /// Largest coefficient index.
        #[arg(short = 'm', long)]
        m: i64,
    },
    /// Shintani coefficient of a cusp form as a sum of cycle integrals.
    #[command(disable_help_flag = true)]
    Shintani {
        #[arg(long, action = clap::ArgAction::Help)]
        help: Option<bool>,
        /// Cusp form file.
        #[arg(short = 'g', long)]
        cusp: PathBuf,
        /// Negative index, as an integer or `p/q`.
        #[arg(short = 'm', long, allow_hyphen_values = true)]
        m: String,
        #[arg(short = 'h', long = "coset")]
        coset: i64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        delta: i64,
        #[arg(long)]
        r: Option<i64>,
        /// Absolute quadrature tolerance.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Run verification suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        /// Input for the lift suites in place of the synthetic inputs.
        #[arg(short = 'f', long)]
        file: Option<PathBuf>,
    },
    /// Draw the walls of the singular set of f as SVG.
    Plot {
        #[arg(short = 'f', long)]
        file: PathBuf,
        #[arg(short = 'o', long)]
        out: PathBuf,
        #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
        xmin: f64,
        #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
        xmax: f64,
        #[arg(long, default_value_t = 2.0)]
        ymax: f64,
        /// Coordinate bound for the enumerated lattice vectors.
        #[arg(long, default_value_t = 40)]
        bound: i64,
    },
}

/// Exit code and message of a failed command.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::SupportViolation { .. } | Error::SymmetryViolation { .. } | Error::Io(_) => 3,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

/// `x` with 15 significant digits.
fn num(x: f64) -> String {
    format!("{x:.14e}")
}

fn cnum(z: Complex64) -> String {
    format!("{} {}", num(z.re), num(z.im))
}

fn pair_from_flags(delta: i64, r: Option<i64>, level: i64) -> Result<DiscriminantPair, Failure> {
    let r = match r {
        Some(r) => r,
        None => (0..2 * level)
            .find(|r| (r * r - delta).rem_euclid(4 * level) == 0)
            .ok_or_else(|| usage(format!("no r with r² ≡ {delta} (mod {})", 4 * level)))?,
    };
    DiscriminantPair::new(delta, r, level).map_err(|e| usage(e.to_string()))
}

fn read_input(path: &Path) -> Result<HarmonicMaassInput, Failure> {
    let file = File::open(path).map_err(|e| Failure(3, format!("{}: {e}", path.display())))?;
    let f = load_input(BufReader::new(file))?;
    f.validate()?;
    Ok(f)
}

fn read_cusp(path: &Path) -> Result<CuspForm, Failure> {
    let file = File::open(path).map_err(|e| Failure(3, format!("{}: {e}", path.display())))?;
    Ok(load_cusp_form(BufReader::new(file))?)
}

fn parse_point(s: &str) -> Result<PointH, Failure> {
    let (x, y) = s.split_once(',').ok_or_else(|| usage(format!("point '{s}' is not of the form x,y")))?;
    let x: f64 = x.trim().parse().map_err(|_| usage(format!("bad x in '{s}'")))?;
    let y: f64 = y.trim().parse().map_err(|_| usage(format!("bad y in '{s}'")))?;
    PointH::new(x, y).map_err(|e| usage(e.to_string()))
}

fn parse_ratio(s: &str) -> Result<Ratio<i64>, Failure> {
    let bad = || usage(format!("bad index '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => {
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(p.trim().parse().map_err(|_| bad())?, q))
        }
        None => Ok(Ratio::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn orbits(level: i64, d: i64, h: i64, delta: i64, r: Option<i64>) -> Result<(), Failure> {
    if level < 1 {
        return Err(usage("N must be positive"));
    }
    let pair = pair_from_flags(delta, r, level)?;
    let reps = orbit_reps(level, d, h)?;
    println!("orbits of discriminant {d} in coset {h} at level {level}: {}", reps.len());
    for (i, l) in reps.iter().enumerate() {
        let chi = if d % delta == 0 { genus_character(&pair, l)?.to_string() } else { "undefined".into() };
        println!("{i}: [{}, {}, {}] chi={chi}", l.a, l.b, l.c);
        println!("ORBIT={i} A={} B={} C={} CHI={chi}", l.a, l.b, l.c);
    }
    println!("COUNT={}", reps.len());
    Ok(())
}

fn eval_phi(z: &str, file: &Path, modes: Option<i64>) -> Result<(), Failure> {
    let z = parse_point(z)?;
    let f = read_input(file)?;
    let mut cfg = LiftConfig::for_input(&f)?;
    cfg.modes = modes;
    let v = phi(z, &f, &cfg)?;
    println!("phi({z}) = {}", cnum(v.value));
    println!("  constant  {}", cnum(v.terms.constant));
    println!("  bernoulli {}", cnum(v.terms.bernoulli));
    println!("  polylog   {}", cnum(v.terms.polylog));
    println!("  chamber   {}", cnum(v.terms.chamber));
    for t in &v.chamber {
        println!("  wall {} m={} h={} weight={} value {}", t.lambda, t.m, t.h, t.weight, cnum(t.value));
    }
    println!("PHI_RE={} PHI_IM={}", num(v.value.re), num(v.value.im));
    println!("ON_WALL={} WALLS={} TAIL={:.3e}", u8::from(v.on_wall), v.chamber.len(), v.tail);
    Ok(())
}

fn shimura(file: &Path, big_m: i64) -> Result<(), Failure> {
    if big_m < 1 {
        return Err(usage("-m must be at least 1"));
    }
    let f = read_input(file)?;
    let cfg = LiftConfig::for_input(&f)?;
    let a = shadow_coeffs(&f);
    let c0 = shimura_constant(&f, &cfg);
    println!("M=0 VALUE_RE={} VALUE_IM={}", num(c0.re), num(c0.im));
    for m in 1..=big_m {
        let v = shimura_coeff(&a, m, &cfg)?;
        let x = xi_phi_coeff(&f, &cfg, m);
        let diff = (v - x).norm() / v.norm().max(x.norm()).max(f64::MIN_POSITIVE);
        println!("M={m} VALUE_RE={} VALUE_IM={} XI_REL_DIFF={diff:.3e}", num(v.re), num(v.im));
    }
    Ok(())
}

fn shintani(path: &Path, m: &str, h: i64, delta: i64, r: Option<i64>, tol: f64) -> Result<(), Failure> {
    let g = read_cusp(path)?;
    if g.weight % 2 != 0 {
        return Err(Failure(3, format!("cusp form weight {} is odd", g.weight)));
    }
    let m = parse_ratio(m)?;
    let pair = pair_from_flags(delta, r, g.level)?;
    let mut cfg = LiftConfig::new(g.weight / 2, pair)?;
    cfg.quad.abs_tol = tol;
    let v = shintani_coeff(&g, m, h, &cfg)?;
    for (l, chi) in &v.orbits {
        println!("orbit {l} chi={chi}");
    }
    println!("shintani({m}, {h}) = {} +- {:.3e}", cnum(v.value), v.error);
    println!("VALUE_RE={} VALUE_IM={} ERROR={:.3e} ORBITS={}", num(v.value.re), num(v.value.im), v.error, v.orbits.len());
    Ok(())
}

fn verify(suite: &str, seed: u64, samples: usize, file: Option<&Path>) -> Result<(), Failure> {
    let input = file.map(read_input).transpose()?;
    let cfg = SuiteConfig { seed, samples, input, ..SuiteConfig::default() };
    let reports = if suite == "all" {
        run_all(&cfg)
    } else {
        vec![run_suite(suite, &cfg).map_err(|e| usage(e.to_string()))?]
    };
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("SUITES={} FAILED={failed}", reports.len());
    if failed > 0 {
        return Err(Failure(1, format!("{failed} suite(s) failed")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Orbits { level, disc, coset, delta, r, .. } => orbits(level, disc, coset, delta, r),
        Command::Phi { z, file, modes } => eval_phi(&z, &file, modes),
        Command::Shimura { file, m } => shimura(&file, m),
        Command::Shintani { cusp, m, coset, delta, r, tol, .. } => shintani(&cusp, &m, coset, delta, r, tol),
        Command::Verify { suite, seed, samples, file } => verify(&suite, seed, samples, file.as_deref()),
        Command::Plot { file, out, xmin, xmax, ymax, bound } => {
            if !(xmin < xmax && ymax > 0.0 && bound > 0) {
                return Err(usage("plot window must satisfy xmin < xmax, ymax > 0 and bound > 0"));
            }
            let f = read_input(&file)?;
            let window = plot::Window { xmin, xmax, ymax };
            let (svg, drawn) = plot::render(&f, window, bound)?;
            std::fs::write(&out, svg).map_err(|e| Failure(1, format!("{}: {e}", out.display())))?;
            println!("WALLS={drawn} OUT={}", out.display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
