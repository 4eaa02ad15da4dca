use gauss_quad::GaussLegendre;
use num_complex::Complex64;
use serde::Serialize;
use std::num::NonZeroUsize;

use crate::error::{Error, Result};

/// Nodes per Gauss–Legendre panel.
pub const PANEL_NODES: usize = 16;

/// Grid sizes and truncations shared by the `SU(1,1)` integrals.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureGrid {
    /// Total radial nodes, split into panels of [`PANEL_NODES`].
    pub radial_nodes: usize,
    /// Trapezoid nodes on each circle.
    pub angular_nodes: usize,
    /// Truncation of the `KAK` radial coordinate.
    pub t_max: f64,
    /// Truncation radius of the disc model of `G/T`.
    pub disc_r_max: f64,
}

impl Default for QuadratureGrid {
    fn default() -> Self {
        Self {
            radial_nodes: 640,
            angular_nodes: 64,
            t_max: 14.0,
            disc_r_max: 0.999999,
        }
    }
}

impl QuadratureGrid {
    pub fn validate(&self) -> Result<()> {
        if self.radial_nodes < PANEL_NODES || self.angular_nodes == 0 {
            return Err(Error::Parse(format!(
                "grid needs at least {PANEL_NODES} radial and 1 angular node"
            )));
        }
        if !(self.t_max > 0.0 && self.t_max.is_finite()) {
            return Err(Error::Parse(format!(
                "t_max must be positive, got {}",
                self.t_max
            )));
        }
        if !(self.disc_r_max > 0.0 && self.disc_r_max < 1.0) {
            return Err(Error::Parse(format!(
                "disc_r_max must lie in (0, 1), got {}",
                self.disc_r_max
            )));
        }
        Ok(())
    }

    /// The same truncations with twice the nodes in each direction.
    pub fn refined(&self) -> Self {
        Self {
            radial_nodes: 2 * self.radial_nodes,
            angular_nodes: 2 * self.angular_nodes,
            ..*self
        }
    }

    pub fn panels(&self) -> usize {
        self.radial_nodes.div_ceil(PANEL_NODES)
    }

    /// Composite rule on `[lo, hi]` using this grid's panel count.
    pub fn radial_rule(&self, lo: f64, hi: f64) -> CompositeRule {
        CompositeRule::new(lo, hi, self.panels())
    }

    /// Trapezoid angles `2πj/N` with weights `1/N`, for averages over a circle.
    pub fn circle(&self) -> impl Iterator<Item = (f64, f64)> {
        let n = self.angular_nodes;
        (0..n).map(move |j| (std::f64::consts::TAU * j as f64 / n as f64, 1.0 / n as f64))
    }
}

/// Composite Gauss–Legendre rule on an interval.
#[derive(Clone, Debug)]
pub struct CompositeRule {
    nodes: Vec<(f64, f64)>,
    /// `nodes[panel_ends[k-1]..panel_ends[k]]` lie in panel `k`.
    panel_ends: Vec<usize>,
    breaks: Vec<f64>,
}

impl CompositeRule {
    pub fn new(lo: f64, hi: f64, panels: usize) -> Self {
        let breaks: Vec<f64> = (0..=panels)
            .map(|k| lo + (hi - lo) * k as f64 / panels as f64)
            .collect();
        Self::with_breaks(breaks)
    }

    /// Panels between consecutive break points.
    pub fn with_breaks(breaks: Vec<f64>) -> Self {
        let gl = GaussLegendre::new(NonZeroUsize::new(PANEL_NODES).expect("nonzero"));
        let mut nodes = Vec::with_capacity(PANEL_NODES * breaks.len());
        let mut panel_ends = Vec::with_capacity(breaks.len());
        for pair in breaks.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let half = 0.5 * (b - a);
            for &(x, w) in gl.as_node_weight_pairs() {
                nodes.push((a + half * (x + 1.0), half * w));
            }
            panel_ends.push(nodes.len());
        }
        Self {
            nodes,
            panel_ends,
            breaks,
        }
    }

    pub fn nodes(&self) -> &[(f64, f64)] {
        &self.nodes
    }

    pub fn breaks(&self) -> &[f64] {
        &self.breaks
    }

    pub fn integrate(&self, f: impl FnMut(f64) -> f64) -> f64 {
        self.panel_sums(f).iter().sum()
    }

    pub fn integrate_complex(&self, mut f: impl FnMut(f64) -> Complex64) -> Complex64 {
        self.nodes.iter().map(|&(x, w)| w * f(x)).sum()
    }

    /// Per-panel integrals, in order.
    pub fn panel_sums(&self, mut f: impl FnMut(f64) -> f64) -> Vec<f64> {
        let mut start = 0;
        self.panel_ends
            .iter()
            .map(|&end| {
                let s = self.nodes[start..end].iter().map(|&(x, w)| w * f(x)).sum();
                start = end;
                s
            })
            .collect()
    }
}
