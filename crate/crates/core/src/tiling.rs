//! Periodic cube colorings that forbid distance 1 under a chosen norm.
//!
//! Space is cut into half-open cells [j*eps, (j+1)*eps)^d; a point's
//! color is its cell coordinate tuple mod m. With eps small enough that
//! one cell has norm-diameter < 1 and m large enough that same-color
//! points in distinct cells are more than distance 1 apart, the m^d
//! colors forbid distance 1 everywhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{NormSpec, Point};

/// Tightest supported constants (c, C) with
/// c*||u||_inf <= ||u|| <= C*||u||_inf in dimension d.
pub fn equivalence_constants(norm: NormSpec, d: usize) -> Result<(f64, f64)> {
    norm.equivalence_constants(d)
}

/// Parameters of one periodic distance-forbidding coloring.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PeriodicColoring {
    pub norm: NormSpec,
    pub d: usize,
    /// Cell side length.
    pub eps: f64,
    /// Modulus; the coloring uses m^d colors.
    pub m: u32,
}

impl PeriodicColoring {
    /// Validated constructor: the cell diameter must be < 1 and
    /// same-color cells along an axis must be > 1 apart.
    pub fn new(norm: NormSpec, d: usize, eps: f64, m: u32) -> Result<Self> {
        let pc = PeriodicColoring::new_unchecked(norm, d, eps, m)?;
        let (c, cc) = norm.equivalence_constants(d)?;
        if eps * cc >= 1.0 {
            return Err(Error::invalid(format!(
                "cell diameter {:.6} >= 1 under the given norm",
                eps * cc
            )));
        }
        if c * (m as f64 - 1.0) * eps <= 1.0 {
            return Err(Error::invalid(format!(
                "same-color cross-cell distance {:.6} <= 1",
                c * (m as f64 - 1.0) * eps
            )));
        }
        Ok(pc)
    }

    /// Constructor without the distance-forbidding invariants, for
    /// experiments with deliberately broken parameters.
    pub fn new_unchecked(norm: NormSpec, d: usize, eps: f64, m: u32) -> Result<Self> {
        norm.validate()?;
        if d < 1 {
            return Err(Error::invalid("dimension must be >= 1"));
        }
        if !(eps.is_finite() && eps > 0.0) {
            return Err(Error::invalid("eps must be positive"));
        }
        if m < 2 {
            return Err(Error::invalid("modulus m must be >= 2"));
        }
        Ok(PeriodicColoring { norm, d, eps, m })
    }

    /// Both invariants hold: cell diameter < 1 and cross-cell
    /// same-color distance > 1.
    pub fn is_valid(&self) -> bool {
        PeriodicColoring::new(self.norm, self.d, self.eps, self.m).is_ok()
    }

    /// Period length m * eps along every axis.
    pub fn period(&self) -> f64 {
        self.m as f64 * self.eps
    }

    /// Total number of colors, m^d.
    pub fn color_count(&self) -> u64 {
        (self.m as u64).pow(self.d as u32)
    }

    /// Cell coordinates mod m: component i is floor(x_i / eps) mod m.
    /// Mathematical floor, so the map is (m*eps)-periodic for negative
    /// coordinates too.
    pub fn color_point(&self, x: &Point) -> Result<Vec<u32>> {
        if x.dim() != self.d {
            return Err(Error::DimensionMismatch(x.dim(), self.d));
        }
        Ok(x.coords()
            .iter()
            .map(|&xi| {
                let cell = (xi / self.eps).floor() as i64;
                cell.rem_euclid(self.m as i64) as u32
            })
            .collect())
    }
}

/// Derive parameters that satisfy both invariants: eps = safety / C_cube
/// where C_cube is the norm-diameter of the unit cube, then the least m
/// with c*(m-1)*eps > 1.
pub fn tiling_params(norm: NormSpec, d: usize, safety: f64) -> Result<PeriodicColoring> {
    if !(safety > 0.0 && safety < 1.0) {
        return Err(Error::invalid("safety must lie in (0, 1)"));
    }
    let (c, cc) = norm.equivalence_constants(d)?;
    // For Lp the cube [0,eps]^d has norm-diameter eps * d^(1/p) = eps * C.
    let eps = safety / cc;
    let mut m = (1.0 / (c * eps)).floor() as u32 + 2;
    while c * (m as f64 - 2.0) * eps > 1.0 {
        m -= 1;
    }
    while c * (m as f64 - 1.0) * eps <= 1.0 {
        m += 1;
    }
    PeriodicColoring::new(norm, d, eps, m)
}

/// Spot-check report from [`verify_forbids`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ForbidReport {
    pub violations: u64,
    pub pairs_checked: u64,
    pub workers: usize,
    pub seed: u64,
}

/// Draw `samples` pairs (x, x + u) with ||u|| = 1 and x uniform in one
/// period, and count pairs with equal color tuples. Deterministic for a
/// fixed seed and worker count; the sample budget is partitioned across
/// workers with per-worker derived seeds and the counts summed.
pub fn verify_forbids(
    pc: &PeriodicColoring,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<ForbidReport> {
    let workers = workers.max(1);
    let chunk = samples / workers as u64;
    let remainder = samples % workers as u64;

    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let quota = chunk + if (w as u64) < remainder { 1 } else { 0 };
            let pc = pc.clone();
            handles.push(scope.spawn(move || worker_check(&pc, quota, seed, w as u64)));
        }
        let mut violations = 0;
        let mut pairs_checked = 0;
        for h in handles {
            let (v, p) = h.join().expect("verification worker panicked")?;
            violations += v;
            pairs_checked += p;
        }
        Ok(ForbidReport {
            violations,
            pairs_checked,
            workers,
            seed,
        })
    })
}

fn worker_check(
    pc: &PeriodicColoring,
    quota: u64,
    seed: u64,
    worker: u64,
) -> Result<(u64, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ worker.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let period = pc.period();
    let mut violations = 0;
    let mut checked = 0;
    for _ in 0..quota {
        let x = Point(
            (0..pc.d)
                .map(|_| rng.gen_range(0.0..period))
                .collect(),
        );
        let Some(u) = unit_direction(pc.norm, pc.d, &mut rng) else {
            continue;
        };
        let y = x.add(&u)?;
        // Guard the sampler, not the coloring: skip pairs whose actual
        // distance drifted from 1.
        if (pc.norm.eval(&y.sub(&x)?) - 1.0).abs() > 1e-12 {
            continue;
        }
        checked += 1;
        if pc.color_point(&x)? == pc.color_point(&y)? {
            violations += 1;
        }
    }
    Ok((violations, checked))
}

/// A uniformly random direction rescaled so ||u|| = 1 under `norm`.
fn unit_direction(norm: NormSpec, d: usize, rng: &mut ChaCha8Rng) -> Option<Point> {
    for _ in 0..16 {
        let g: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
        let len = norm.eval(&g);
        if len > 1e-9 {
            return Some(Point(g.into_iter().map(|c| c / len).collect()));
        }
    }
    None
}
