//! The figure, spectrum, and potential commands.

use std::path::{Path, PathBuf};

use darboux::bender_boettcher::{self, BBParams};
use darboux::exp_potential::{exact_spectrum, semiclassical_spectrum, SectorSpec, SpectrumKind};
use darboux::harmonic::{self, HarmonicParams};
use darboux::numerics::{discretize_hamiltonian, eigenvalues, match_spectrum, Grid1D};
use darboux::transform::SeedSolution;
use darboux::Complex64;
use serde::Serialize;

use crate::output::{fmt_f64, write_json, CsvTable};
use crate::parse::GridSpec;

pub type CliResult<T> = Result<T, String>;

const FIGURE_COLUMNS: [&str; 8] = [
    "x", "re_v2", "im_v2", "epsilon", "re_beta", "im_beta", "pt_defect", "singular",
];

/// One figure's parameter sweep appended into a single table. `points` must
/// be symmetric about the origin (x[i] = -x[n-1-i]) so the PT-defect column
/// can pair mirrored samples.
fn figure_table(
    eps_beta: impl Iterator<Item = (f64, Complex64)>,
    points: &[f64],
) -> CliResult<CsvTable> {
    let cpoints: Vec<Complex64> = points.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut table = CsvTable::new(&FIGURE_COLUMNS);
    for (eps, beta) in eps_beta {
        let params = HarmonicParams::new(eps, beta).map_err(|e| e.to_string())?;
        if !harmonic::admissible(&params).map_err(|e| e.to_string())? {
            return Err(format!(
                "inadmissible parameters (eps={eps}, beta={beta}): real beta on the cut, \
                 beta_c = {:.10}",
                harmonic::beta_c(eps).map_err(|e| e.to_string())?
            ));
        }
        let seed = params.seed();
        let v2 = darboux::transform::partner_potential(
            &seed,
            &|x| Ok(x * x * 0.5),
            &cpoints,
            darboux::transform::FamilyMeta::default(),
        )
        .map_err(|e| e.to_string())?;
        let n = v2.samples.len();
        for (i, smp) in v2.samples.iter().enumerate() {
            let mirrored = &v2.samples[n - 1 - i];
            let pt_defect = (mirrored.v2.conj() - smp.v2).norm();
            table.push(vec![
                fmt_f64(smp.x.re),
                fmt_f64(smp.v2.re),
                fmt_f64(smp.v2.im),
                fmt_f64(eps),
                fmt_f64(beta.re),
                fmt_f64(beta.im),
                fmt_f64(pt_defect),
                (smp.singular as u8).to_string(),
            ]);
        }
    }
    Ok(table)
}

/// The standard symmetric figure grid: 1001 points on [-5, 5].
fn base_points() -> Vec<f64> {
    (0..1001).map(|i| -5.0 + 0.01 * i as f64).collect()
}

/// Figure-3 grid: the base grid plus a mirrored zoom window over the region
/// where the seed's real zero approaches the axis as Im beta -> 0^-, fine
/// enough (spacing 1e-3) for the singular-regime cap to be observable.
fn fig3_points() -> Vec<f64> {
    let mut pts = base_points();
    for i in 0..=200 {
        let x = 0.45 + 0.001 * i as f64;
        pts.push(x);
        pts.push(-x);
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    pts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
}

/// Emit the named figure's data file into `out_dir`; returns the file path.
pub fn cmd_figures(which: FigureId, out_dir: &Path) -> CliResult<PathBuf> {
    let (name, table) = match which {
        FigureId::Fig1 => {
            // eps sweep over (-3, 1/2) at fixed beta = i.
            let sweep = (1..)
                .map(|k| -3.0 + 0.05 * k as f64)
                .take_while(|&e| e < 0.5 - 1e-12)
                .map(|e| (e, Complex64::new(0.0, 1.0)));
            ("fig1.csv", figure_table(sweep, &base_points())?)
        }
        FigureId::Fig2 => {
            // eps = -1/2, Re beta = 0.5, Im beta in [-2, 2].
            let sweep = (0..=80).map(|k| (-0.5, Complex64::new(0.5, -2.0 + 0.05 * k as f64)));
            ("fig2.csv", figure_table(sweep, &base_points())?)
        }
        FigureId::Fig3 => {
            // eps = -1/2, Re beta = 2, Im beta in [-1, 0): the 0.05-step
            // sweep plus a geometric tail towards the cut, where the
            // singular regime (|V2| beyond the reporting cap) shows up.
            let steps = (0..=19).map(|k| -1.0 + 0.05 * k as f64);
            let tail = (1..=6).map(|k| -0.05 * 0.5f64.powi(k));
            let sweep = steps
                .chain(tail)
                .map(|im| (-0.5, Complex64::new(2.0, im)));
            ("fig3.csv", figure_table(sweep, &fig3_points())?)
        }
    };
    let path = out_dir.join(name);
    table.write(&path).map_err(|e| e.to_string())?;
    Ok(path)
}

#[derive(Debug, Serialize)]
struct SpectrumLevel {
    n: i64,
    nu: Option<f64>,
    analytic: f64,
    numeric_re: Option<f64>,
    numeric_im: Option<f64>,
    abs_delta: Option<f64>,
    excluded: bool,
}

#[derive(Debug, Serialize)]
struct SpectrumDoc {
    schema: u32,
    family: String,
    kind: String,
    /// Ending sector index; present only for the periodic well.
    m: Option<u32>,
    levels: Vec<SpectrumLevel>,
    notice: Option<String>,
}

pub struct HarmonicSpectrumArgs {
    pub epsilon: f64,
    pub beta: Complex64,
    pub levels: usize,
    pub grid: Option<GridSpec>,
    pub numeric: bool,
}

pub fn cmd_spectrum_harmonic(args: &HarmonicSpectrumArgs) -> CliResult<SpectrumOutput> {
    let params = HarmonicParams::new(args.epsilon, args.beta).map_err(|e| e.to_string())?;
    let spec = harmonic::spectrum(&params, args.levels).map_err(|e| e.to_string())?;
    let analytic = spec.levels();

    let numeric = if args.numeric {
        let grid = args
            .grid
            .map(|g| g.build())
            .unwrap_or_else(|| Grid1D::new(-10.0, 10.0, 801).expect("static grid"));
        let seed = params.seed();
        let v2: Result<Vec<Complex64>, _> = grid
            .points()
            .map(|x| {
                let (u, up) = seed.eval(Complex64::new(x, 0.0))?;
                let f = up / u;
                Ok::<_, darboux::Error>(f * f - 0.5 * x * x + 2.0 * args.epsilon)
            })
            .collect();
        let v2 = v2.map_err(|e| e.to_string())?;
        let m = discretize_hamiltonian(&grid, &v2).map_err(|e| e.to_string())?;
        let eig = eigenvalues(&m, 0.0).map_err(|e| e.to_string())?;
        Some(match_spectrum(&eig, &analytic, 0.05))
    } else {
        None
    };

    let mut levels = Vec::new();
    for (i, &a) in analytic.iter().enumerate() {
        let n = i as i64 - 1; // the first entry is the extra level
        let matched = numeric.as_ref().map(|rep| rep.entries[i]);
        levels.push(SpectrumLevel {
            n,
            nu: None,
            analytic: a,
            numeric_re: matched.and_then(|m| m.matched.map(|v| v.re)),
            numeric_im: matched.and_then(|m| m.matched.map(|v| v.im)),
            abs_delta: matched.and_then(|m| m.delta),
            excluded: false,
        });
    }
    Ok(SpectrumOutput {
        doc: SpectrumDoc {
            schema: 1,
            family: "harmonic".into(),
            kind: "exact".into(),
            m: None,
            levels,
            notice: None,
        },
    })
}

pub struct ExpSpectrumArgs {
    pub m: u32,
    pub levels: usize,
    pub semiclassical: bool,
}

pub fn cmd_spectrum_expwell(args: &ExpSpectrumArgs) -> CliResult<SpectrumOutput> {
    let (result, kind_name) = if args.semiclassical {
        (
            semiclassical_spectrum(args.m, args.levels).map_err(|e| e.to_string())?,
            "semiclassical",
        )
    } else {
        (
            exact_spectrum(
                SectorSpec::new(args.m).map_err(|e| e.to_string())?,
                args.levels,
            ),
            "exact",
        )
    };

    let mut levels = Vec::new();
    let mut notice = None;
    match result.kind {
        SpectrumKind::Unbound => {
            notice = Some(
                "unbound spectrum: a contour ending in the neighbouring sector puts no \
                 condition on the order, so no discrete levels exist"
                    .to_string(),
            );
        }
        _ => {
            let mut included = result.nu_values.iter().zip(result.energies.iter());
            let max_n = if result.excluded_indices.is_empty() {
                result.nu_values.len() as u64
            } else {
                result.nu_values.len() as u64 + result.excluded_indices.len() as u64
            };
            let mut idx = 0u64;
            while idx < max_n {
                if result.excluded_indices.contains(&idx) {
                    levels.push(SpectrumLevel {
                        n: idx as i64,
                        nu: None,
                        analytic: f64::NAN,
                        numeric_re: None,
                        numeric_im: None,
                        abs_delta: None,
                        excluded: true,
                    });
                } else if let Some((&nu, &e)) = included.next() {
                    levels.push(SpectrumLevel {
                        n: idx as i64,
                        nu: Some(nu),
                        analytic: e,
                        numeric_re: None,
                        numeric_im: None,
                        abs_delta: None,
                        excluded: false,
                    });
                } else {
                    break;
                }
                idx += 1;
            }
            if result.kind == SpectrumKind::Semiclassical && args.m == 1 {
                notice = Some(
                    "semiclassical levels for m = 1 are spurious: the exact treatment is \
                     unbound there"
                        .to_string(),
                );
            }
        }
    }
    Ok(SpectrumOutput {
        doc: SpectrumDoc {
            schema: 1,
            family: "expwell".into(),
            kind: kind_name.into(),
            m: Some(args.m),
            levels,
            notice,
        },
    })
}

pub struct SpectrumOutput {
    doc: SpectrumDoc,
}

impl SpectrumOutput {
    pub fn print_table(&self) {
        println!("family: {}  ({})", self.doc.family, self.doc.kind);
        if let Some(n) = &self.doc.notice {
            println!("notice: {n}");
        }
        if self.doc.levels.is_empty() {
            return;
        }
        let has_numeric = self.doc.levels.iter().any(|l| l.numeric_re.is_some());
        if has_numeric {
            println!("{:>4} {:>22} {:>22} {:>12}", "n", "analytic", "numeric", "|delta|");
        } else {
            println!("{:>4} {:>10} {:>22}", "n", "nu", "analytic");
        }
        for l in &self.doc.levels {
            if l.excluded {
                println!("{:>4} {:>10} {:>22}", l.n, "-", "excluded (integer order)");
                continue;
            }
            if has_numeric {
                match (l.numeric_re, l.abs_delta) {
                    (Some(re), Some(d)) => {
                        println!("{:>4} {:>22} {:>22} {:>12.3e}", l.n, l.analytic, re, d)
                    }
                    _ => println!("{:>4} {:>22} {:>22} {:>12}", l.n, l.analytic, "-", "-"),
                }
            } else {
                match l.nu {
                    Some(nu) => println!("{:>4} {:>10} {:>22}", l.n, nu, l.analytic),
                    None => println!("{:>4} {:>10} {:>22}", l.n, "-", l.analytic),
                }
            }
        }
    }

    pub fn write_csv(&self, path: &Path) -> CliResult<()> {
        let mut t = match self.doc.m {
            Some(_) => CsvTable::new(&["kind", "m", "n", "nu", "energy", "excluded"]),
            None => CsvTable::new(&["family", "n", "analytic", "numeric_re", "numeric_im", "abs_delta"]),
        };
        for l in &self.doc.levels {
            match self.doc.m {
                Some(m) => t.push(vec![
                    self.doc.kind.clone(),
                    m.to_string(),
                    l.n.to_string(),
                    l.nu.map(fmt_f64).unwrap_or_default(),
                    if l.analytic.is_nan() {
                        String::new()
                    } else {
                        fmt_f64(l.analytic)
                    },
                    (l.excluded as u8).to_string(),
                ]),
                None => t.push(vec![
                    self.doc.family.clone(),
                    l.n.to_string(),
                    fmt_f64(l.analytic),
                    l.numeric_re.map(fmt_f64).unwrap_or_default(),
                    l.numeric_im.map(fmt_f64).unwrap_or_default(),
                    l.abs_delta.map(fmt_f64).unwrap_or_default(),
                ]),
            }
        }
        t.write(path).map_err(|e| e.to_string())
    }

    pub fn write_json(&self, path: &Path) -> CliResult<()> {
        write_json(path, &self.doc).map_err(|e| e.to_string())
    }
}

pub struct HarmonicPotentialArgs {
    pub epsilon: f64,
    pub beta: Complex64,
    pub grid: GridSpec,
}

pub fn cmd_potential_harmonic(args: &HarmonicPotentialArgs, path: &Path) -> CliResult<()> {
    let grid = args.grid.build();
    let points: Vec<f64> = grid.points().collect();
    let table = figure_table(std::iter::once((args.epsilon, args.beta)), &points)?;
    table.write(path).map_err(|e| e.to_string())
}

pub struct BBPotentialArgs {
    pub big_n: f64,
    pub alpha: Complex64,
    pub beta: Complex64,
    pub scale: f64,
    pub count: usize,
}

pub fn cmd_potential_bb(args: &BBPotentialArgs, path: &Path) -> CliResult<()> {
    let params =
        BBParams::new(args.big_n, args.alpha, args.beta).map_err(|e| e.to_string())?;
    let contour =
        bender_boettcher::contour(args.big_n, args.scale, args.count).map_err(|e| e.to_string())?;
    let v2 = bender_boettcher::partner_v2(&params, &contour).map_err(|e| e.to_string())?;
    let mut t = CsvTable::new(&["t", "re_x", "im_x", "re_v2", "im_v2"]);
    for (&tpar, smp) in contour.ts().iter().zip(v2.samples.iter()) {
        t.push(vec![
            fmt_f64(tpar),
            fmt_f64(smp.x.re),
            fmt_f64(smp.x.im),
            fmt_f64(smp.v2.re),
            fmt_f64(smp.v2.im),
        ]);
    }
    t.write(path).map_err(|e| e.to_string())
}
