//! Strength-field frames: classify every cell of the (0, π)² angle square at
//! fixed γ and write the result as a binary PGM, with guide-line endpoints in
//! a JSON sidecar.
//!
//! Classification samples each cell at its midpoint only — no anti-aliasing,
//! no interpolation — so frames are deterministic down to the byte.

use crate::hyptrig::{self, AngleTriple};
use crate::{map_range, Error, Result};
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};
use std::path::Path;

/// Classification of one grid cell.
///
/// `Band(k)` covers strength in [k/50, (k+1)/50) for k = 0..=49; `Saturated`
/// is strength ≥ 1, `Negative` strength < 0, and `Infeasible` marks midpoints
/// with α + β + γ ≥ π, where no triangle exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellClass {
    Infeasible,
    Negative,
    Band(u8),
    Saturated,
}

/// A points × points classification of the angle square at fixed γ.
/// `cell(i, j)` classifies the midpoint (α, β) = ((j+0.5)·π/points,
/// (i+0.5)·π/points): rows index β upward, columns α rightward.
#[derive(Clone, Debug)]
pub struct FrameGrid {
    gamma: f64,
    points: usize,
    cells: Vec<CellClass>,
}

impl FrameGrid {
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn cell(&self, i: usize, j: usize) -> CellClass {
        self.cells[i * self.points + j]
    }
}

fn classify(alpha: f64, beta: f64, gamma: f64) -> CellClass {
    if alpha + beta + gamma >= PI {
        return CellClass::Infeasible;
    }
    let angles = AngleTriple::new(alpha, beta, gamma).expect("midpoint below the diagonal");
    let strength = hyptrig::solve_triangle(angles).strength;
    if strength < 0.0 {
        CellClass::Negative
    } else if strength >= 1.0 {
        CellClass::Saturated
    } else {
        CellClass::Band(((strength * 50.0) as usize).min(49) as u8)
    }
}

pub fn render_frame(gamma: f64, points: usize) -> Result<FrameGrid> {
    if !(gamma > 0.0 && gamma < FRAC_PI_2) {
        return Err(Error::OutsideDomain {
            what: "gamma",
            value: gamma,
            domain: "(0, pi/2)",
        });
    }
    assert!(points >= 16, "need at least a 16x16 grid");
    let step = PI / points as f64;
    let rows: Vec<Vec<CellClass>> = map_range(points, |i| {
        let beta = (i as f64 + 0.5) * step;
        (0..points)
            .map(|j| classify((j as f64 + 0.5) * step, beta, gamma))
            .collect()
    });
    Ok(FrameGrid {
        gamma,
        points,
        cells: rows.concat(),
    })
}

/// Raster estimate of the failure area μ(N_γ): Negative cell count times the
/// cell area (π/points)².
pub fn negative_fraction(frame: &FrameGrid) -> f64 {
    let cell = PI / frame.points as f64;
    let count = frame
        .cells
        .iter()
        .filter(|&&c| c == CellClass::Negative)
        .count();
    count as f64 * cell * cell
}

/// Gray value for a cell: Infeasible 255, Negative 0, Band(k) 40 + 4k,
/// Saturated 239.
pub fn byte_for(class: CellClass) -> u8 {
    match class {
        CellClass::Infeasible => 255,
        CellClass::Negative => 0,
        CellClass::Band(k) => 40 + 4 * k,
        CellClass::Saturated => 239,
    }
}

fn write_bytes(path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Binary PGM (P5, maxval 255), one byte per cell. Image row 0 is the top of
/// the plot, β near π, so rows are written in reverse index order.
pub fn write_pgm(frame: &FrameGrid, path: &Path) -> Result<()> {
    let n = frame.points;
    let mut bytes = Vec::with_capacity(n * n + 32);
    bytes.extend_from_slice(format!("P5\n{n} {n}\n255\n").as_bytes());
    for i in (0..n).rev() {
        bytes.extend(frame.cells[i * n..(i + 1) * n].iter().map(|&c| byte_for(c)));
    }
    write_bytes(path, &bytes)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct GuideLine {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Sidecar {
    pub gamma: f64,
    pub points: usize,
    pub guide_lines: Vec<GuideLine>,
}

/// Guide lines the plots draw over the field: the Euclidean diagonal
/// α + β = π − γ, and the two edges of the "γ is the greatest angle" square,
/// each truncated at the diagonal.
pub fn sidecar(frame: &FrameGrid) -> Sidecar {
    let g = frame.gamma;
    let w = PI - g;
    let cap = g.min(PI - 2.0 * g);
    Sidecar {
        gamma: g,
        points: frame.points,
        guide_lines: vec![
            GuideLine {
                x1: 0.0,
                y1: w,
                x2: w,
                y2: 0.0,
            },
            GuideLine {
                x1: 0.0,
                y1: g,
                x2: cap,
                y2: g,
            },
            GuideLine {
                x1: g,
                y1: 0.0,
                x2: g,
                y2: cap,
            },
        ],
    }
}

pub fn write_sidecar(frame: &FrameGrid, path: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(&sidecar(frame)).expect("sidecar serializes");
    write_bytes(path, json.as_bytes())
}
