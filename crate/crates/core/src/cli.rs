//! Command-line front end.
//!
//! Exit codes: `0` success, `1` golden-value mismatch in `reproduce`,
//! `2` usage error. Every command is deterministic; `--seed` is accepted
//! everywhere and echoed in machine-readable output.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::json;

use crate::bell::{
    ch_terms, classify, lhv_bounds, ChSettings, Classification, DeterministicStrategy,
};
use crate::measure::{commutator_norm, MeasurementSetting};
use crate::optimize::{
    minimize_ch, sweep_settings, sweep_state, SearchOptions, SweepAxis, SweepGrid, SweepParam,
    SweepRecord,
};
use crate::sampling::DEFAULT_SEED;
use crate::state::TwoModeState;
use crate::TOL;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fock-nonlocal",
    version,
    about = "Single-particle nonlocality in two-mode Fock space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    flags: Flags,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the reference expectation values, CH value and LHV bounds.
    Reproduce,
    /// Evaluate the CH value over a grid of settings or state coefficients (CSV).
    Sweep,
    /// Search for the settings that minimize the CH value.
    Optimize,
    /// List all deterministic local strategies and the resulting bounds.
    Lhv,
    /// Spectral norm of the commutator of a projector with the number operator.
    Commutator {
        /// Angle θ in radians; `pi/6`-style literals accepted.
        #[arg(allow_hyphen_values = true)]
        theta: String,
        /// Angle φ in radians.
        #[arg(allow_hyphen_values = true, default_value = "0")]
        phi: String,
    },
}

#[derive(Debug, Args)]
struct Flags {
    /// State coefficients `p,q,r` of p|10> + q|01> + r|00>; complex as `re+imi`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    state: Option<String>,

    /// Settings `θa,φa,θa',φa',θb,φb,θb',φb'`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    settings: Option<String>,

    /// Grid axis `name:lo:hi:steps` (repeatable).
    #[arg(long = "grid", global = true)]
    grid: Vec<String>,

    /// Coarse grid points per angle for `optimize`.
    #[arg(long, global = true)]
    points: Option<usize>,

    /// Coordinate-descent cycles.
    #[arg(long, global = true)]
    iters: Option<usize>,

    /// Initial refinement step (radians).
    #[arg(long, global = true)]
    step: Option<f64>,

    /// Step shrink factor in (0, 1).
    #[arg(long, global = true)]
    shrink: Option<f64>,

    /// Convergence threshold on value change.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Search phases continuously instead of {0, π}.
    #[arg(long, global = true)]
    full_phase: bool,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Usage<T> = std::result::Result<T, UsageError>;

/// Parses an angle in radians: plain numbers or multiples/fractions of π
/// such as `pi`, `-pi/4`, `2pi/3`, `3*pi/4`, `0.5pi`.
pub fn parse_angle(s: &str) -> Option<f64> {
    let t = s.trim().to_ascii_lowercase().replace('π', "pi");
    if let Ok(v) = t.parse::<f64>() {
        return v.is_finite().then_some(v);
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t.as_str(), None),
    };
    let pi_at = num.find("pi")?;
    if !num[pi_at + 2..].trim().is_empty() {
        return None;
    }
    let coef = num[..pi_at].trim().trim_end_matches('*').trim();
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().ok()?,
    };
    let den = match den {
        Some(d) => d.parse::<f64>().ok().filter(|d| *d != 0.0)?,
        None => 1.0,
    };
    let v = coef * PI / den;
    v.is_finite().then_some(v)
}

/// Parses `re`, `imi`, `re+imi` or `re-imi`.
pub fn parse_complex(s: &str) -> Option<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return None;
    }
    let finite = |z: Complex64| (z.re.is_finite() && z.im.is_finite()).then_some(z);
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return finite(Complex64::new(t.parse().ok()?, 0.0));
    };
    // split at the last sign that is not the leading one or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |x: &str| -> Option<f64> {
        match x {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            v => v.parse().ok(),
        }
    };
    match split {
        Some(k) => finite(Complex64::new(body[..k].parse().ok()?, imag(&body[k..])?)),
        None => finite(Complex64::new(0.0, imag(body)?)),
    }
}

fn parse_state(s: &str) -> Usage<TwoModeState> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(UsageError(format!("--state expects p,q,r; got `{s}`")));
    }
    let c = parts
        .iter()
        .map(|p| parse_complex(p).ok_or_else(|| UsageError(format!("bad coefficient `{p}`"))))
        .collect::<Usage<Vec<_>>>()?;
    Ok(TwoModeState::from_coefficients(c[0], c[1], c[2])?)
}

fn parse_real_coefficients(s: &str) -> Usage<[f64; 3]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(UsageError(format!("--state expects p,q,r; got `{s}`")));
    }
    let mut out = [0.0; 3];
    for (slot, p) in out.iter_mut().zip(&parts) {
        let z = parse_complex(p).ok_or_else(|| UsageError(format!("bad coefficient `{p}`")))?;
        if z.im != 0.0 {
            return Err(UsageError(
                "state sweeps take real coefficients only".into(),
            ));
        }
        *slot = z.re;
    }
    Ok(out)
}

fn parse_settings(s: &str) -> Usage<ChSettings> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 8 {
        return Err(UsageError(format!(
            "--settings expects 8 comma-separated angles; got {}",
            parts.len()
        )));
    }
    let mut angles = [0.0; 8];
    for (slot, p) in angles.iter_mut().zip(&parts) {
        *slot = parse_angle(p).ok_or_else(|| UsageError(format!("bad angle `{p}`")))?;
    }
    Ok(ChSettings::from_angles(angles)?)
}

fn parse_axis(s: &str) -> Usage<SweepAxis> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 4 {
        return Err(UsageError(format!(
            "--grid expects name:lo:hi:steps; got `{s}`"
        )));
    }
    let param: SweepParam = parts[0].parse()?;
    let bound = |x: &str| parse_angle(x).ok_or_else(|| UsageError(format!("bad grid bound `{x}`")));
    let lo = bound(parts[1])?;
    let hi = bound(parts[2])?;
    let steps: usize = parts[3]
        .trim()
        .parse()
        .map_err(|_| UsageError(format!("bad step count `{}`", parts[3])))?;
    Ok(SweepAxis::new(param, lo, hi, steps)?)
}

fn fmt_state(s: &TwoModeState) -> String {
    let fmt = |z: Complex64| {
        if z.im == 0.0 {
            format!("{}", z.re)
        } else {
            format!("{}{:+}i", z.re, z.im)
        }
    };
    format!(
        "p={} q={} r={}",
        fmt(s.amplitude(1, 0)),
        fmt(s.amplitude(0, 1)),
        fmt(s.amplitude(0, 0))
    )
}

/// Golden values for the reference state and settings.
struct Golden {
    name: &'static str,
    key: &'static str,
    actual: f64,
    expected: f64,
}

fn reproduce(flags: &Flags, out: &mut dyn Write) -> Usage<i32> {
    if flags.state.is_some() || flags.settings.is_some() || !flags.grid.is_empty() {
        return Err(UsageError(
            "reproduce uses the fixed reference state and settings; --state, --settings and --grid are not accepted"
                .into(),
        ));
    }
    let psi = TwoModeState::single_particle_antisymmetric();
    let settings = ChSettings::reference();
    let t = ch_terms(&psi, &settings);
    let ch = t.value();
    let (lo, hi) = lhv_bounds();
    let class = classify(ch).classification;

    let rows = [
        Golden {
            name: "<P_a'>",
            key: "p_a_prime",
            actual: t.a_prime,
            expected: 0.5,
        },
        Golden {
            name: "<P_b'>",
            key: "p_b_prime",
            actual: t.b_prime,
            expected: 0.5,
        },
        Golden {
            name: "<P_a P_b>",
            key: "p_a_p_b",
            actual: t.a_b,
            expected: 0.0,
        },
        Golden {
            name: "<P_a P_b'>",
            key: "p_a_p_b_prime",
            actual: t.a_b_prime,
            expected: 0.375,
        },
        Golden {
            name: "<P_a' P_b>",
            key: "p_a_prime_p_b",
            actual: t.a_prime_b,
            expected: 0.375,
        },
        Golden {
            name: "<P_a' P_b'>",
            key: "p_a_prime_p_b_prime",
            actual: t.a_prime_b_prime,
            expected: 0.375,
        },
        Golden {
            name: "CH",
            key: "ch_value",
            actual: ch,
            expected: -0.125,
        },
        Golden {
            name: "LHV min",
            key: "lhv_min",
            actual: lo,
            expected: 0.0,
        },
        Golden {
            name: "LHV max",
            key: "lhv_max",
            actual: hi,
            expected: 1.0,
        },
    ];
    let mismatches: Vec<&Golden> = rows
        .iter()
        .filter(|g| (g.actual - g.expected).abs() > TOL)
        .collect();
    let class_ok = class == Classification::BelowLower;
    let ok = mismatches.is_empty() && class_ok;

    if flags.json {
        let mut rec = serde_json::Map::new();
        for g in &rows {
            rec.insert(g.key.into(), json!(g.actual));
        }
        rec.insert("classification".into(), json!(class.as_str()));
        rec.insert("matches_golden".into(), json!(ok));
        rec.insert("seed".into(), json!(flags.seed));
        writeln!(out, "{}", serde_json::Value::Object(rec))?;
    } else {
        writeln!(out, "state: (|10> - |01>)/sqrt(2)")?;
        writeln!(
            out,
            "settings: a = presence, a' = (|1> + sqrt3|0>)/2, b = presence, b' = (|1> - sqrt3|0>)/2"
        )?;
        writeln!(
            out,
            "{:<14}{:>12}{:>12}  status",
            "quantity", "value", "expected"
        )?;
        for g in &rows[..7] {
            let status = if (g.actual - g.expected).abs() <= TOL {
                "ok"
            } else {
                "MISMATCH"
            };
            writeln!(
                out,
                "{:<14}{:>12.6}{:>12.6}  {}",
                g.name, g.actual, g.expected, status
            )?;
        }
        writeln!(out, "{:<14}{:>12}", "LHV bounds", format!("[{lo}, {hi}]"))?;
        writeln!(out, "{:<14}{:>12}", "classification", class.as_str())?;
    }
    if !ok {
        let mut diff = String::new();
        for g in &mismatches {
            diff.push_str(&format!(
                "mismatch {}: got {} expected {} (|diff| = {:e})\n",
                g.name,
                g.actual,
                g.expected,
                (g.actual - g.expected).abs()
            ));
        }
        if !class_ok {
            diff.push_str(&format!(
                "mismatch classification: got {} expected BELOW_LOWER\n",
                class.as_str()
            ));
        }
        write!(out, "{diff}")?;
        return Ok(EXIT_MISMATCH);
    }
    Ok(EXIT_OK)
}

fn write_csv(
    records: &[SweepRecord],
    params: &[SweepParam],
    out: &mut dyn Write,
) -> io::Result<()> {
    let mut header: Vec<&str> = params.iter().map(SweepParam::name).collect();
    header.extend(["ch_value", "classification"]);
    writeln!(out, "{}", header.join(","))?;
    for r in records {
        let mut row: Vec<String> = r.values.iter().map(|(_, v)| v.to_string()).collect();
        row.push(r.ch_value.to_string());
        row.push(
            r.classification
                .map_or("SKIPPED_ZERO_STATE", |c| c.as_str())
                .to_string(),
        );
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

fn sweep(flags: &Flags, out: &mut dyn Write) -> Usage<i32> {
    if flags.grid.is_empty() {
        return Err(UsageError("sweep needs at least one --grid axis".into()));
    }
    let axes = flags
        .grid
        .iter()
        .map(|g| parse_axis(g))
        .collect::<Usage<Vec<_>>>()?;
    let grid = SweepGrid::new(axes)?;
    let settings = match &flags.settings {
        Some(s) => parse_settings(s)?,
        None => ChSettings::reference(),
    };
    let records = if grid.sweeps_settings_only() {
        let state = match &flags.state {
            Some(s) => parse_state(s)?,
            None => TwoModeState::single_particle_antisymmetric(),
        };
        sweep_settings(&state, &settings, &grid)?
    } else if grid.sweeps_state_only() {
        let base = match &flags.state {
            Some(s) => parse_real_coefficients(s)?,
            None => [
                std::f64::consts::FRAC_1_SQRT_2,
                -std::f64::consts::FRAC_1_SQRT_2,
                0.0,
            ],
        };
        sweep_state(&settings, base, &grid)?
    } else {
        return Err(UsageError(
            "a grid may sweep setting angles or state coefficients, not both".into(),
        ));
    };
    if flags.json {
        let rows: Vec<_> = records
            .iter()
            .map(|r| {
                let mut m = serde_json::Map::new();
                for (p, v) in &r.values {
                    m.insert(p.name().into(), json!(v));
                }
                m.insert("ch_value".into(), json!(r.ch_value));
                m.insert(
                    "classification".into(),
                    json!(r
                        .classification
                        .map_or("SKIPPED_ZERO_STATE", |c| c.as_str())),
                );
                serde_json::Value::Object(m)
            })
            .collect();
        writeln!(out, "{}", json!({ "seed": flags.seed, "records": rows }))?;
    } else {
        write_csv(&records, &grid.params(), out)?;
    }
    Ok(EXIT_OK)
}

fn optimize(flags: &Flags, out: &mut dyn Write) -> Usage<i32> {
    if !flags.grid.is_empty() {
        return Err(UsageError(
            "optimize does not take --grid; use --settings to pin the search box".into(),
        ));
    }
    let state = match &flags.state {
        Some(s) => parse_state(s)?,
        None => TwoModeState::single_particle_antisymmetric(),
    };
    let defaults = SearchOptions::default();
    let mut opts = SearchOptions {
        grid_points: flags.points.unwrap_or(defaults.grid_points),
        iterations: flags.iters.unwrap_or(defaults.iterations),
        initial_step: flags.step.unwrap_or(defaults.initial_step),
        shrink: flags.shrink.unwrap_or(defaults.shrink),
        tolerance: flags.tol.unwrap_or(defaults.tolerance),
        full_phase: flags.full_phase,
        bounds: defaults.bounds,
    };
    if let Some(s) = &flags.settings {
        opts = opts.pinned_to(&parse_settings(s)?);
    }
    opts.validate()?;
    let result = minimize_ch(&state, &opts)?;
    let class = classify(result.value).classification;

    if flags.json {
        let rec = json!({
            "state": fmt_state(&state),
            "settings": result.settings.angles(),
            "ch_value": result.value,
            "coarse_value": result.coarse_value,
            "classification": class.as_str(),
            "evaluations": result.evaluations,
            "seed": flags.seed,
        });
        writeln!(out, "{rec}")?;
    } else {
        writeln!(out, "state: {}", fmt_state(&state))?;
        let s = &result.settings;
        for (label, m) in [("a", s.a), ("a'", s.a_prime), ("b", s.b), ("b'", s.b_prime)] {
            writeln!(out, "{label:<3} theta={} phi={}", m.theta(), m.phi())?;
        }
        writeln!(out, "ch_value: {}", result.value)?;
        writeln!(out, "coarse_value: {}", result.coarse_value)?;
        writeln!(out, "classification: {}", class.as_str())?;
        writeln!(out, "evaluations: {}", result.evaluations)?;
    }
    Ok(EXIT_OK)
}

fn reject_state_flags(flags: &Flags, cmd: &str) -> Usage<()> {
    if flags.state.is_some() || flags.settings.is_some() || !flags.grid.is_empty() {
        return Err(UsageError(format!(
            "{cmd} does not take --state, --settings or --grid"
        )));
    }
    Ok(())
}

fn lhv(flags: &Flags, out: &mut dyn Write) -> Usage<i32> {
    reject_state_flags(flags, "lhv")?;
    let (lo, hi) = lhv_bounds();
    let strategies: Vec<DeterministicStrategy> = DeterministicStrategy::all().collect();
    if flags.json {
        let rows: Vec<_> = strategies
            .iter()
            .map(|d| json!({ "strategy": d, "ch_value": d.ch_value() }))
            .collect();
        writeln!(
            out,
            "{}",
            json!({ "strategies": rows, "min": lo, "max": hi, "seed": flags.seed })
        )?;
    } else {
        writeln!(out, "out_a,out_ap,out_b,out_bp,ch_value")?;
        for d in &strategies {
            writeln!(out, "{d},{}", d.ch_value())?;
        }
        writeln!(out, "min: {lo}")?;
        writeln!(out, "max: {hi}")?;
    }
    Ok(EXIT_OK)
}

fn commutator(flags: &Flags, theta: &str, phi: &str, out: &mut dyn Write) -> Usage<i32> {
    reject_state_flags(flags, "commutator")?;
    let theta = parse_angle(theta).ok_or_else(|| UsageError(format!("bad angle `{theta}`")))?;
    let phi = parse_angle(phi).ok_or_else(|| UsageError(format!("bad angle `{phi}`")))?;
    let setting = MeasurementSetting::new(theta, phi)?;
    let norm = commutator_norm(&setting);
    let [c0, c1] = setting.target().amplitudes();
    let closed = c0.norm() * c1.norm();
    if flags.json {
        writeln!(
            out,
            "{}",
            json!({
                "theta": setting.theta(),
                "phi": setting.phi(),
                "commutator_norm": norm,
                "closed_form": closed,
                "seed": flags.seed,
            })
        )?;
    } else {
        writeln!(out, "theta: {}", setting.theta())?;
        writeln!(out, "phi: {}", setting.phi())?;
        writeln!(out, "commutator_norm: {norm}")?;
        writeln!(out, "|cos(theta) sin(theta)|: {closed}")?;
    }
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` (unless `--out` is given) and diagnostics to `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };

    let mut buf = Vec::new();
    let result = match &cli.command {
        Command::Reproduce => reproduce(&cli.flags, &mut buf),
        Command::Sweep => sweep(&cli.flags, &mut buf),
        Command::Optimize => optimize(&cli.flags, &mut buf),
        Command::Lhv => lhv(&cli.flags, &mut buf),
        Command::Commutator { theta, phi } => commutator(&cli.flags, theta, phi, &mut buf),
    };
    let code = match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };

    let written = match &cli.flags.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&buf)),
        None => out.write_all(&buf),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    code
}
