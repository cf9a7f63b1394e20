//! Command-line front end: argument parsing, dispatch and JSON reports.
//!
//! Every verb prints one JSON document to stdout. Exit codes: 0 computed
//! and (for an assertion) holds, 1 computed and fails, 2 degenerate or a
//! precondition failed, 3 parse or usage error.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ffd_core::mpoly::homogeneous_vars;
use ffd_core::parse::{parse_affine, parse_int_list, parse_mpoly, parse_ratfun, parse_rational, split_top_level};
use ffd_core::toric::{
    boundary_coefficients, boundary_weil, canonical, hypersurface_weil,
    invariant_divisor_polytope, is_campana_integral, ray_by_vector, Component, Fan, HypersurfaceDivisor, OrbifoldDatum,
    TorusPoint,
};
use ffd_core::verify::{
    abc_trichotomy, brownawell_masser, campana_truncation_gap, example1_scan, proximity_bound, run_batch, AbcParameters,
    BatchConfig, BatchKind, ScanParameters,
};
use ffd_core::{counting, height, order_at, places_of, projective_height, CountMode, Error, Place, PlaceSet, RatFun, Rational, Truncation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ffd", version, about = "Exact heights, counting functions and Campana checks over k(t)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Zeros,
    Poles,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// h(f), the total pole degree, with the divisor of f.
    Height {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// v_p(f).
    Order {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        place: String,
    },
    /// N_S(f), N_S^(1)(f) and optionally N_S^(m)(f).
    Count {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long = "S", default_value = "")]
        s: String,
        #[arg(long, value_enum, default_value = "zeros")]
        mode: Mode,
        /// Truncation level; omit for full multiplicities only.
        #[arg(long)]
        m: Option<u32>,
    },
    /// h(f_0, ..., f_n) of a projective point.
    Projheight {
        #[arg(required = true, allow_hyphen_values = true)]
        fs: Vec<String>,
    },
    /// Brownawell-Masser for f_0 + ... + f_n = 1.
    CheckBm {
        #[arg(long = "S", default_value = "")]
        s: String,
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        fs: Vec<String>,
    },
    /// Affine proximity bound for F at S-units g.
    CheckProx {
        #[arg(long = "F", allow_hyphen_values = true)]
        f: String,
        #[arg(long = "S", default_value = "")]
        s: String,
        #[arg(required = true, allow_hyphen_values = true)]
        g: Vec<String>,
    },
    /// Evaluates the abc-type trichotomy clauses for G at g.
    CheckAbc {
        #[arg(long = "G", allow_hyphen_values = true)]
        g_poly: String,
        #[arg(long = "S", default_value = "")]
        s: String,
        #[arg(long, default_value = "1/3")]
        epsilon: String,
        #[arg(long, default_value_t = 6)]
        ell: u64,
        #[arg(long, default_value_t = 100)]
        c0: u64,
        #[arg(required = true, allow_hyphen_values = true)]
        g: Vec<String>,
    },
    /// Weil function of a boundary ray or a hypersurface at a place.
    ToricWeil {
        #[arg(long)]
        fan: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "divisor")]
        ray: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        divisor: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Read the point as homogeneous coordinates [f_0 : ... : f_n].
        #[arg(long)]
        projective: bool,
        #[arg(long, allow_hyphen_values = true)]
        place: String,
    },
    /// Campana (Delta, S)-integrality of a point, optionally with the
    /// truncation gap along one divisor.
    CampanaVerify {
        #[arg(long)]
        fan: String,
        /// Components as `divisor@eps` separated by `;`; a divisor is
        /// `ray:<vector>`, `torus:<poly>` or a homogeneous polynomial.
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        projective: bool,
        #[arg(long = "S", default_value = "")]
        s: String,
        /// Divisor A for the one-half truncation gap.
        #[arg(long, allow_hyphen_values = true)]
        gap: Option<String>,
        #[arg(long, default_value = "1/3")]
        epsilon: String,
    },
    /// Polytope of a torus-invariant divisor and its bigness.
    Polytope {
        #[arg(long)]
        fan: String,
        /// Coefficients per ray, or `boundary` / `canonical`.
        #[arg(long, default_value = "boundary", allow_hyphen_values = true)]
        divisor: String,
    },
    /// Seeded batch of generated instances, checked and tallied.
    Gen {
        #[arg(long, value_parser = ["bm", "proximity", "truncation-gap", "abc"])]
        kind: String,
        #[arg(long, env = "FFD_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        deg: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Scan for perfect powers F(f_0^n_0, f_1^n_1, f_2^n_2).
    ScanPower {
        #[arg(long = "F", allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value_t = 2)]
        deg_bound: usize,
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        window: u32,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, env = "FFD_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Smoothness, completeness and admissibility of a fan.
    FanValidate {
        /// Built-in name (P2, F1, P1xP1, ...) or path to a TOML fan file.
        fan: String,
    },
}

/// Uniform output document.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Exit code for a library error: malformed input is a usage error,
/// everything else a failed precondition.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::ArityMismatch { .. }
        | Error::InvalidArgument(_)
        | Error::InvalidPlace(_)
        | Error::InvalidEpsilon(_)
        | Error::MalformedFan(_)
        | Error::RayNotInFan(_)
        | Error::NonMaximalCone(_) => EXIT_USAGE,
        _ => EXIT_DEGENERATE,
    }
}

struct Out {
    result: Value,
    warnings: Vec<String>,
    exit_code: i32,
}

impl Out {
    fn ok(result: Value) -> Self {
        Out {
            result,
            warnings: Vec::new(),
            exit_code: EXIT_OK,
        }
    }

    fn with_code(result: Value, exit_code: i32) -> Self {
        Out {
            result,
            warnings: Vec::new(),
            exit_code,
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn ratfuns(items: &[String]) -> ffd_core::Result<Vec<RatFun>> {
    items.iter().map(|s| parse_ratfun(s)).collect()
}

fn point_list(text: &str) -> ffd_core::Result<Vec<RatFun>> {
    split_top_level(text).iter().map(|s| parse_ratfun(s)).collect()
}

fn torus_point(text: &str, projective: bool) -> ffd_core::Result<TorusPoint> {
    let coords = point_list(text)?;
    if projective {
        TorusPoint::from_homogeneous(&coords)
    } else {
        TorusPoint::new(coords)
    }
}

fn hypersurface(fan: &Fan, text: &str) -> ffd_core::Result<HypersurfaceDivisor> {
    let n = fan.dim();
    if let Some(body) = text.strip_prefix("torus:") {
        return HypersurfaceDivisor::from_torus_polynomial(fan, parse_affine(body, n)?);
    }
    HypersurfaceDivisor::homogeneous(fan, parse_mpoly(text, &homogeneous_vars(n))?)
}

fn component(fan: &Fan, text: &str) -> ffd_core::Result<Component> {
    match text.strip_prefix("ray:") {
        Some(v) => Ok(Component::Ray(ray_by_vector(fan, &parse_int_list(v)?)?)),
        None => Ok(Component::Hypersurface(hypersurface(fan, text)?)),
    }
}

/// Parses `divisor@eps;divisor@eps;...`.
fn orbifold(fan: &Fan, text: &str) -> ffd_core::Result<OrbifoldDatum> {
    let mut parts = Vec::new();
    for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (div, eps) = item
            .rsplit_once('@')
            .ok_or_else(|| Error::InvalidArgument(format!("component {item:?} lacks '@eps'")))?;
        parts.push((component(fan, div.trim())?, parse_rational(eps.trim())?));
    }
    OrbifoldDatum::new(parts)
}

fn places(text: &str) -> ffd_core::Result<PlaceSet> {
    PlaceSet::parse_list(text)
}

fn dispatch(cmd: &Command) -> ffd_core::Result<Out> {
    match cmd {
        Command::Height { f } => {
            let f = parse_ratfun(f)?;
            let divisor: Vec<Value> = places_of(&f)?
                .iter()
                .map(|(p, v)| json!({ "place": p.to_string(), "order": v }))
                .collect();
            Ok(Out::ok(json!({ "height": height(&f)?, "divisor": divisor })))
        }
        Command::Order { f, place } => {
            let p: Place = place.parse()?;
            Ok(Out::ok(json!({ "order": order_at(&parse_ratfun(f)?, &p)? })))
        }
        Command::Count { f, s, mode, m } => {
            let mode = match mode {
                Mode::Zeros => CountMode::Zeros,
                Mode::Poles => CountMode::Poles,
            };
            let trunc = m.map_or(Truncation::Unbounded, Truncation::At);
            Ok(Out::ok(to_value(&counting(&parse_ratfun(f)?, &places(s)?, mode, trunc)?)))
        }
        Command::Projheight { fs } => Ok(Out::ok(json!({ "height": projective_height(&ratfuns(fs)?)? }))),
        Command::CheckBm { s, fs } => {
            let r = brownawell_masser(&ratfuns(fs)?, &places(s)?)?;
            Ok(Out::with_code(to_value(&r), r.exit_code()))
        }
        Command::CheckProx { f, s, g } => {
            let g = ratfuns(g)?;
            let f = parse_affine(f, g.len())?;
            let r = proximity_bound(&f, &g, &places(s)?)?;
            Ok(Out::with_code(to_value(&r), r.exit_code()))
        }
        Command::CheckAbc {
            g_poly,
            s,
            epsilon,
            ell,
            c0,
            g,
        } => {
            let g = ratfuns(g)?;
            let params = AbcParameters::new(parse_rational(epsilon)?, *ell, *c0)?;
            let r = abc_trichotomy(&parse_affine(g_poly, g.len())?, &g, &places(s)?, &params)?;
            let mut out = Out::ok(to_value(&r));
            out.warnings.push("clauses are reported, not asserted: the exceptional set is not constructed".into());
            Ok(out)
        }
        Command::ToricWeil {
            fan,
            ray,
            divisor,
            point,
            projective,
            place,
        } => {
            let fan = Fan::load(fan)?;
            let u = torus_point(point, *projective)?;
            let p: Place = place.parse()?;
            match (ray, divisor) {
                (Some(r), _) => {
                    let idx = ray_by_vector(&fan, &parse_int_list(r)?)?;
                    Ok(Out::ok(json!({ "value": boundary_weil(&fan, idx, &u, &p)? })))
                }
                (None, Some(d)) => {
                    let d = hypersurface(&fan, d)?;
                    Ok(Out::ok(to_value(&hypersurface_weil(&fan, &d, &u, &p)?)))
                }
                (None, None) => Err(Error::InvalidArgument("give --ray or --divisor".into())),
            }
        }
        Command::CampanaVerify {
            fan,
            delta,
            point,
            projective,
            s,
            gap,
            epsilon,
        } => {
            let fan = Fan::load(fan)?;
            let delta = orbifold(&fan, delta)?;
            let u = torus_point(point, *projective)?;
            let s = places(s)?;
            let verdict = is_campana_integral(&fan, &delta, &u, &s)?;
            let mut code = if verdict.integral { EXIT_OK } else { EXIT_FAIL };
            let mut result = json!({ "integrality": to_value(&verdict) });
            if let Some(a) = gap {
                let a = hypersurface(&fan, a)?;
                let r = campana_truncation_gap(&fan, &a, &delta, &u, &s, &parse_rational(epsilon)?)?;
                code = code.max(r.exit_code());
                result["truncation_gap"] = to_value(&r);
            }
            Ok(Out::with_code(result, code))
        }
        Command::Polytope { fan, divisor } => {
            let fan = Fan::load(fan)?;
            let coeffs: Vec<Rational> = match divisor.as_str() {
                "boundary" => boundary_coefficients(&fan),
                "canonical" => canonical(&fan),
                list => split_top_level(list).iter().map(|x| parse_rational(x)).collect::<ffd_core::Result<_>>()?,
            };
            let p = invariant_divisor_polytope(&fan, &coeffs)?;
            Ok(Out::ok(json!({
                "vertices": to_value(&p),
                "affine_dimension": p.affine_dimension(),
                "big": p.is_big(),
            })))
        }
        Command::Gen { kind, seed, count, deg, n } => {
            let mut cfg = BatchConfig::new(kind.parse::<BatchKind>()?, *seed, *count);
            if let Some(d) = deg {
                cfg.deg_max = *d;
            }
            cfg.n = *n;
            let r = run_batch(&cfg)?;
            let code = if r.all_asserted_hold() { EXIT_OK } else { EXIT_FAIL };
            Ok(Out::with_code(to_value(&r), code))
        }
        Command::ScanPower {
            f,
            deg_bound,
            m,
            window,
            samples,
            seed,
        } => {
            let f = parse_mpoly(f, &homogeneous_vars(2))?;
            let params = ScanParameters {
                deg_bound: *deg_bound,
                m: *m,
                window: *window,
                seed: *seed,
                samples: *samples,
            };
            let r = example1_scan(&f, &params)?;
            let h = &r.hypotheses;
            let mut out = Out::ok(to_value(&r));
            if !(h.homogeneous && h.constant_coefficients && h.squarefree && h.nonzero_at_coordinate_points) {
                out.warnings.push("F does not satisfy the smooth plane curve hypotheses".into());
            }
            Ok(out)
        }
        Command::FanValidate { fan } => {
            let v = Fan::load(fan)?.validate();
            let code = if v.smooth && v.complete { EXIT_OK } else { EXIT_FAIL };
            Ok(Out::with_code(to_value(&v), code))
        }
    }
}

fn echo(cmd: &Command) -> (String, BTreeMap<String, String>) {
    let mut m = BTreeMap::new();
    let mut put = |k: &str, v: String| {
        m.insert(k.to_string(), v);
    };
    let name = match cmd {
        Command::Height { f } => {
            put("f", f.clone());
            "height"
        }
        Command::Order { f, place } => {
            put("f", f.clone());
            put("place", place.clone());
            "order"
        }
        Command::Count { f, s, mode, m } => {
            put("f", f.clone());
            put("S", s.clone());
            put("mode", format!("{mode:?}").to_lowercase());
            put("m", m.map_or("unbounded".into(), |x| x.to_string()));
            "count"
        }
        Command::Projheight { fs } => {
            put("point", fs.join(" : "));
            "projheight"
        }
        Command::CheckBm { s, fs } => {
            put("S", s.clone());
            put("fs", fs.join(", "));
            "check-bm"
        }
        Command::CheckProx { f, s, g } => {
            put("F", f.clone());
            put("S", s.clone());
            put("g", g.join(", "));
            "check-prox"
        }
        Command::CheckAbc {
            g_poly,
            s,
            epsilon,
            ell,
            c0,
            g,
        } => {
            put("G", g_poly.clone());
            put("S", s.clone());
            put("epsilon", epsilon.clone());
            put("ell", ell.to_string());
            put("c0", c0.to_string());
            put("g", g.join(", "));
            "check-abc"
        }
        Command::ToricWeil {
            fan,
            ray,
            divisor,
            point,
            projective,
            place,
        } => {
            put("fan", fan.clone());
            if let Some(r) = ray {
                put("ray", r.clone());
            }
            if let Some(d) = divisor {
                put("divisor", d.clone());
            }
            put("point", point.clone());
            put("projective", projective.to_string());
            put("place", place.clone());
            "toric-weil"
        }
        Command::CampanaVerify {
            fan,
            delta,
            point,
            projective,
            s,
            gap,
            epsilon,
        } => {
            put("fan", fan.clone());
            put("delta", delta.clone());
            put("point", point.clone());
            put("projective", projective.to_string());
            put("S", s.clone());
            if let Some(a) = gap {
                put("gap", a.clone());
                put("epsilon", epsilon.clone());
            }
            "campana-verify"
        }
        Command::Polytope { fan, divisor } => {
            put("fan", fan.clone());
            put("divisor", divisor.clone());
            "polytope"
        }
        Command::Gen { kind, seed, count, deg, n } => {
            put("kind", kind.clone());
            put("seed", seed.to_string());
            put("count", count.to_string());
            if let Some(d) = deg {
                put("deg", d.to_string());
            }
            if let Some(n) = n {
                put("n", n.to_string());
            }
            "gen"
        }
        Command::ScanPower {
            f,
            deg_bound,
            m,
            window,
            samples,
            seed,
        } => {
            put("F", f.clone());
            put("deg_bound", deg_bound.to_string());
            put("m", m.to_string());
            put("window", window.to_string());
            put("samples", samples.to_string());
            put("seed", seed.to_string());
            "scan-power"
        }
        Command::FanValidate { fan } => {
            put("fan", fan.clone());
            "fan-validate"
        }
    };
    (name.to_string(), m)
}

/// Runs a parsed command. Library errors become reports with an `error`
/// result and the matching exit code.
pub fn run(cli: &Cli) -> Report {
    let (command, inputs) = echo(&cli.command);
    match dispatch(&cli.command) {
        Ok(out) => Report {
            command,
            inputs,
            result: out.result,
            warnings: out.warnings,
            exit_code: out.exit_code,
        },
        Err(e) => Report {
            command,
            inputs,
            result: json!({ "error": e.to_string() }),
            warnings: Vec::new(),
            exit_code: error_exit_code(&e),
        },
    }
}

/// What the binary prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub text: String,
    pub exit_code: i32,
    /// Usage errors go to stderr; reports, help and version to stdout.
    pub to_stderr: bool,
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => {
            let r = run(&cli);
            Invocation {
                text: r.to_json(),
                exit_code: r.exit_code,
                to_stderr: false,
            }
        }
        Err(e) => {
            let help = matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion);
            Invocation {
                text: e.render().to_string(),
                exit_code: if help { EXIT_OK } else { EXIT_USAGE },
                to_stderr: !help,
            }
        }
    }
}
