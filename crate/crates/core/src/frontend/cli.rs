//! Command-line driver. [`run`] is re-entrant and writes only to the given
//! streams (and `--out`), so it can be exercised in-process.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use super::{default_window, emit_svg, figure_scene, fmt_num, FigureParams, FigurePreset, Report};
use crate::constructions::{
    invert_between, maclaurin_sample, normal_by_angle, right_angle_solve, three_bar_solve, Side,
};
use crate::curves::{BernoulliConfig, PolynomialLemniscate};
use crate::error::Error;
use crate::geometry::Point;
use crate::tracer::{contours_to_csv, total_area, trace, TraceWindow};
use crate::verify::{self, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Svg,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "lemniscate",
    version,
    about = "Lemniscate constructions, tracing and figures"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Focus coordinates `x1,y1,x2,y2,...`
    #[arg(
        long,
        global = true,
        default_value = "-1,0,1,0",
        allow_hyphen_values = true
    )]
    foci: String,
    /// Lemniscate radius (n-th root of the distance product); defaults to
    /// half the focal distance for two foci and 1 otherwise
    #[arg(long, global = true)]
    radius: Option<f64>,
    /// Tracing window `xmin,xmax,ymin,ymax`
    #[arg(long, global = true, allow_hyphen_values = true)]
    window: Option<String>,
    /// Grid cells per side
    #[arg(long, global = true, default_value_t = 512)]
    grid: usize,
    /// Write the result here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Trace the lemniscate of the given foci and radius
    Trace,
    /// Solve the three-stick linkage at a drive angle
    Linkage {
        /// Angle of stick F₁A in degrees
        #[arg(long, default_value_t = 90.0, allow_hyphen_values = true)]
        angle: f64,
        #[arg(long, default_value = "opposite")]
        side: Side,
        /// Sweep this many angles over a full turn instead
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Lay off the chord of the circle construction along a secant
    Maclaurin {
        /// Secant angle from the O→F₁ ray in degrees
        #[arg(long, default_value_t = 30.0, allow_hyphen_values = true)]
        angle: f64,
    },
    /// Solve the right-angle linkage at a crank angle
    Rightangle {
        /// Crank angle at F₁ in degrees
        #[arg(long, default_value_t = 60.0, allow_hyphen_values = true)]
        angle: f64,
    },
    /// Invert a point in the circle about O through the foci
    Invert {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Normal to the lemniscate by angle doubling
    Normal {
        /// A point on the curve
        #[arg(long, allow_hyphen_values = true, conflicts_with = "angle")]
        point: Option<String>,
        /// Polar angle about O in degrees
        #[arg(long, allow_hyphen_values = true)]
        angle: Option<f64>,
    },
    /// Exact and traced area
    Area,
    /// Expand the product of squared distances into a polynomial
    Expand,
    /// Render a figure
    Figure {
        #[arg(long, default_value = "threebar")]
        preset: String,
        /// Construction angle in degrees (θ, φ or α depending on the preset)
        #[arg(long, allow_hyphen_values = true)]
        angle: Option<f64>,
        /// Keep the SVG y axis pointing down
        #[arg(long)]
        no_flip: bool,
    },
    /// Run every numerical check; exits 1 if any fails
    Verify {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1_000)]
        small_samples: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Result of a command: text to emit and whether a verification failed.
struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            failed: false,
        }
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

fn parse_list(s: &str, what: &str) -> std::result::Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Failure::Usage(format!("invalid number `{t}` in --{what}")))
        })
        .collect()
}

fn parse_point(s: &str) -> std::result::Result<Point, Failure> {
    match parse_list(s, "point")?.as_slice() {
        [x, y] => Ok(Point::new(*x, *y)),
        _ => Err(Failure::Usage("--point expects `x,y`".into())),
    }
}

impl Common {
    fn foci(&self) -> std::result::Result<Vec<Point>, Failure> {
        let v = parse_list(&self.foci, "foci")?;
        if v.is_empty() || v.len() % 2 != 0 {
            return Err(Failure::Usage(
                "--foci expects an even number of coordinates".into(),
            ));
        }
        Ok(v.chunks(2).map(|p| Point::new(p[0], p[1])).collect())
    }

    fn bernoulli(&self) -> std::result::Result<BernoulliConfig, Failure> {
        match self.foci()?.as_slice() {
            [f1, f2] => {
                let cfg = BernoulliConfig::new(*f1, *f2)?;
                if let Some(r) = self.radius {
                    if (r - cfg.c()).abs() > 1e-12 * cfg.c() {
                        return Err(Failure::Usage(format!(
                            "this command needs the lemniscate of Bernoulli (radius {})",
                            fmt_num(cfg.c())
                        )));
                    }
                }
                Ok(cfg)
            }
            _ => Err(Failure::Usage("this command needs exactly two foci".into())),
        }
    }

    fn lemniscate(&self) -> std::result::Result<PolynomialLemniscate, Failure> {
        let foci = self.foci()?;
        let radius = match (self.radius, foci.as_slice()) {
            (Some(r), _) => r,
            (None, [f1, f2]) => 0.5 * f1.distance(*f2),
            (None, _) => 1.0,
        };
        Ok(PolynomialLemniscate::new(foci, radius)?)
    }

    fn window(&self, l: &PolynomialLemniscate) -> std::result::Result<TraceWindow, Failure> {
        let g = self.grid;
        if let Some(w) = &self.window {
            return match parse_list(w, "window")?.as_slice() {
                [a, b, c, d] => Ok(TraceWindow::new(*a, *b, *c, *d, g, g)?),
                _ => Err(Failure::Usage(
                    "--window expects `xmin,xmax,ymin,ymax`".into(),
                )),
            };
        }
        match l.foci() {
            [f1, f2] if (l.radius() - 0.5 * f1.distance(*f2)).abs() <= 1e-12 * l.radius() => {
                Ok(default_window(&BernoulliConfig::new(*f1, *f2)?, g, g)?)
            }
            _ => Ok(TraceWindow::around(l, g, g)?),
        }
    }

    fn format_or(
        &self,
        default: Option<Format>,
        allowed: &[Format],
    ) -> std::result::Result<Option<Format>, Failure> {
        match self.format.or(default) {
            Some(f) if !allowed.contains(&f) => Err(Failure::Usage(format!(
                "--format {} is not supported by this command",
                f.to_possible_value()
                    .map(|v| v.get_name().to_string())
                    .unwrap_or_default()
            ))),
            other => Ok(other),
        }
    }
}

fn pt(p: Point) -> String {
    format!("{},{}", fmt_num(p.x), fmt_num(p.y))
}

fn opt_pt(p: Option<Point>) -> String {
    p.map(pt).unwrap_or_else(|| "none".into())
}

fn config_json(common: &Common) -> serde_json::Value {
    json!({
        "foci": common.foci,
        "radius": common.radius,
        "window": common.window,
        "grid": common.grid,
    })
}

fn json_text<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_trace(common: &Common) -> CmdResult {
    let fmt = common.format_or(Some(Format::Csv), &[Format::Csv, Format::Json, Format::Svg])?;
    let l = common.lemniscate()?;
    let w = common.window(&l)?;
    let contours = trace(&l, &w)?;
    let text = match fmt {
        Some(Format::Json) => {
            let worst = contours.iter().map(|c| c.max_residual).fold(0.0, f64::max);
            Report::new(config_json(common))
                .with_contours(&contours)
                .check("max_residual", worst)
                .check("area", total_area(&contours))
                .to_json()
        }
        Some(Format::Svg) => {
            let mut scene = super::Scene::new(w);
            let width = 0.004 * (w.xmax - w.xmin);
            for c in contours {
                scene.push(
                    super::Shape::Polyline {
                        points: c.points,
                        closed: c.closed,
                    },
                    super::Style::solid(width),
                )?;
            }
            emit_svg(&scene, true)
        }
        _ => contours_to_csv(&contours),
    };
    Ok(Outcome::ok(text))
}

fn cmd_linkage(common: &Common, angle: f64, side: Side, samples: Option<usize>) -> CmdResult {
    let fmt = common.format_or(None, &[Format::Json, Format::Csv])?;
    let cfg = common.bernoulli()?;
    let states = match samples {
        Some(n) => crate::constructions::three_bar_sweep(
            &cfg,
            &crate::constructions::three_bar_angles(n),
            side,
        )
        .into_iter()
        .collect::<crate::error::Result<Vec<_>>>()?,
        None => vec![three_bar_solve(&cfg, angle.to_radians(), side)?],
    };
    let text = match fmt {
        Some(Format::Json) => json_text(&states),
        Some(Format::Csv) => {
            let mut s = String::from("theta_deg,ax,ay,bx,by,xx,xy\n");
            for st in &states {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt_num(st.theta.to_degrees()),
                    pt(st.a),
                    pt(st.b),
                    pt(st.x)
                ));
            }
            s
        }
        _ => states
            .iter()
            .map(|st| {
                format!(
                    "theta={} A={} B={} X={} P={} Q={} residual={:.3e}\n",
                    fmt_num(st.theta.to_degrees()),
                    pt(st.a),
                    pt(st.b),
                    pt(st.x),
                    opt_pt(st.p),
                    opt_pt(st.q),
                    cfg.field(st.x).abs()
                )
            })
            .collect(),
    };
    Ok(Outcome::ok(text))
}

fn cmd_maclaurin(common: &Common, angle: f64) -> CmdResult {
    let fmt = common.format_or(None, &[Format::Json])?;
    let cfg = common.bernoulli()?;
    let m = maclaurin_sample(&cfg, angle.to_radians())?;
    let text = match fmt {
        Some(_) => json_text(&m),
        None => format!(
            "A={} B={} |AB|={} X={} X'={}\n",
            pt(m.a),
            pt(m.b),
            fmt_num(m.a.distance(m.b)),
            pt(m.x),
            pt(m.x_prime)
        ),
    };
    Ok(Outcome::ok(text))
}

fn cmd_rightangle(common: &Common, angle: f64) -> CmdResult {
    let fmt = common.format_or(None, &[Format::Json])?;
    let cfg = common.bernoulli()?;
    let r = right_angle_solve(&cfg, angle.to_radians())?;
    let text = match fmt {
        Some(_) => json_text(&r),
        None => format!("A={} X={} Y={}\n", pt(r.a), pt(r.x), pt(r.y)),
    };
    Ok(Outcome::ok(text))
}

fn cmd_invert(common: &Common, point: &str) -> CmdResult {
    let fmt = common.format_or(None, &[Format::Json])?;
    let cfg = common.bernoulli()?;
    let p = parse_point(point)?;
    let q = invert_between(&cfg, p)?;
    let text = match fmt {
        Some(_) => json_text(&json!({ "point": p, "image": q })),
        None => format!("{}\n", pt(q)),
    };
    Ok(Outcome::ok(text))
}

fn cmd_normal(common: &Common, point: Option<&str>, angle: Option<f64>) -> CmdResult {
    let fmt = common.format_or(None, &[Format::Json])?;
    let cfg = common.bernoulli()?;
    let x = match (point, angle) {
        (Some(p), _) => parse_point(p)?,
        (None, Some(a)) => cfg.polar_point(a.to_radians())?,
        (None, None) => return Err(Failure::Usage("normal needs --point or --angle".into())),
    };
    let line = normal_by_angle(&cfg, x)?;
    let d = line.direction();
    let text = match fmt {
        Some(_) => json_text(&json!({ "point": x, "direction": d })),
        None => format!("point={} direction={}\n", pt(x), pt(Point::new(d.x, d.y))),
    };
    Ok(Outcome::ok(text))
}

fn cmd_area(common: &Common) -> CmdResult {
    let fmt = common.format_or(None, &[Format::Json])?;
    let l = common.lemniscate()?;
    let w = common.window(&l)?;
    let traced = total_area(&trace(&l, &w)?);
    let exact = match l.foci() {
        [f1, f2] if (l.radius() - 0.5 * f1.distance(*f2)).abs() <= 1e-12 * l.radius() => {
            Some(BernoulliConfig::new(*f1, *f2)?.area())
        }
        _ => None,
    };
    let text = match fmt {
        Some(_) => {
            let mut r = Report::new(config_json(common)).check("traced_area", traced);
            if let Some(e) = exact {
                r = r
                    .check("exact_area", e)
                    .check("relative_error", (traced - e).abs() / e);
            }
            r.to_json()
        }
        None => match exact {
            Some(e) => format!(
                "exact={} traced={} relative_error={:.3e}\n",
                fmt_num(e),
                fmt_num(traced),
                (traced - e).abs() / e
            ),
            None => format!("traced={}\n", fmt_num(traced)),
        },
    };
    Ok(Outcome::ok(text))
}

fn cmd_expand(common: &Common) -> CmdResult {
    let fmt = common.format_or(None, &[Format::Json])?;
    let table = common.lemniscate()?.expand()?;
    let text = match fmt {
        Some(_) => json_text(&table),
        None => format!("{table}\n"),
    };
    Ok(Outcome::ok(text))
}

fn cmd_figure(common: &Common, preset: &str, angle: Option<f64>, no_flip: bool) -> CmdResult {
    common.format_or(Some(Format::Svg), &[Format::Svg])?;
    let preset: FigurePreset = preset.parse()?;
    let cfg = common.bernoulli()?;
    let mut params = FigureParams {
        grid: common.grid,
        ..FigureParams::default()
    };
    if let Some(a) = angle {
        let a = a.to_radians();
        match preset {
            FigurePreset::Maclaurin => params.phi = a,
            FigurePreset::RightAngle => params.alpha = a,
            _ => params.theta = a,
        }
    }
    let scene = figure_scene(preset, &cfg, &params)?;
    Ok(Outcome::ok(emit_svg(&scene, !no_flip)))
}

fn cmd_verify(common: &Common, samples: usize, small_samples: usize) -> CmdResult {
    let fmt = common.format_or(None, &[Format::Json])?;
    let cfg = common.bernoulli()?;
    let opts = VerifyOptions {
        samples,
        small_samples,
        grid: common.grid,
        ..VerifyOptions::default()
    };
    let checks = verify::run(&cfg, &opts)?;
    let failed = checks.iter().any(|c| !c.passed());
    let text = match fmt {
        Some(_) => {
            let mut r = Report::new(config_json(common));
            for c in &checks {
                r = r.check(c.name.clone(), c.value);
            }
            r.to_json()
        }
        None => checks.iter().map(|c| format!("{c}\n")).collect(),
    };
    Ok(Outcome { text, failed })
}

fn dispatch(cli: &Cli) -> CmdResult {
    let common = &cli.common;
    match &cli.command {
        Command::Trace => cmd_trace(common),
        Command::Linkage {
            angle,
            side,
            samples,
        } => cmd_linkage(common, *angle, *side, *samples),
        Command::Maclaurin { angle } => cmd_maclaurin(common, *angle),
        Command::Rightangle { angle } => cmd_rightangle(common, *angle),
        Command::Invert { point } => cmd_invert(common, point),
        Command::Normal { point, angle } => cmd_normal(common, point.as_deref(), *angle),
        Command::Area => cmd_area(common),
        Command::Expand => cmd_expand(common),
        Command::Figure {
            preset,
            angle,
            no_flip,
        } => cmd_figure(common, preset, *angle, *no_flip),
        Command::Verify {
            samples,
            small_samples,
        } => cmd_verify(common, *samples, *small_samples),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code: 0 success, 1 failed verification or I/O
/// error, 2 usage or domain error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = dispatch(&cli).and_then(|outcome| {
        match &cli.common.out {
            Some(path) => std::fs::write(path, &outcome.text)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
            None => stdout
                .write_all(outcome.text.as_bytes())
                .map_err(|e| Failure::Io(e.to_string()))?,
        }
        Ok(outcome.failed)
    });
    match result {
        Ok(false) => EXIT_OK,
        Ok(true) => {
            let _ = writeln!(stderr, "verification failed");
            EXIT_FAILURE
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILURE
        }
    }
}
