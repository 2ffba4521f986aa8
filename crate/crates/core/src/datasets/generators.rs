//! Seeded synthetic datasets.
//!
//! All generators draw from `ChaCha8Rng` seeded with `seed_from_u64`, a
//! portable stream cipher PRNG, so a spec reproduces the same bytes on every
//! platform.

use std::f64::consts::PI;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::clustering::{Clustering, NOISE};
use crate::error::{Error, Result};
use crate::points::PointSet;

/// Concentric annuli with uniform background noise kept off the rings.
#[derive(Debug, Clone, PartialEq)]
pub struct RingsSpec {
    pub rings: usize,
    pub points_per_ring: usize,
    pub noise: usize,
    /// Center radius of the innermost ring.
    pub inner_radius: f64,
    /// Radial distance between consecutive ring centers.
    pub ring_gap: f64,
    /// Radial thickness of each annulus.
    pub band_width: f64,
    /// Minimum radial clearance between a noise point and any annulus.
    pub noise_margin: f64,
    /// How far the square noise region extends beyond the outermost ring's center radius.
    pub noise_padding: f64,
    pub seed: u64,
}

impl RingsSpec {
    pub fn new(seed: u64) -> Self {
        Self {
            rings: 3,
            points_per_ring: 300,
            noise: 150,
            inner_radius: 1.0,
            ring_gap: 1.5,
            band_width: 0.3,
            noise_margin: 0.3,
            noise_padding: 3.0,
            seed,
        }
    }
}

/// Two interleaved half circles of radius 1.
#[derive(Debug, Clone, PartialEq)]
pub struct MoonsSpec {
    pub points_per_moon: usize,
    /// Standard deviation of the Gaussian jitter as a fraction of the moon radius.
    pub jitter: f64,
    pub seed: u64,
}

impl MoonsSpec {
    pub fn new(seed: u64) -> Self {
        Self {
            points_per_moon: 150,
            jitter: 0.0,
            seed,
        }
    }
}

/// Uniformly filled balls placed along the first axis, plus an optional noise group.
#[derive(Debug, Clone, PartialEq)]
pub struct BallsSpec {
    pub balls: usize,
    pub points_per_ball: usize,
    pub radius: f64,
    /// Distance between consecutive ball centers.
    pub center_distance: f64,
    pub dim: usize,
    /// Number of noise points drawn uniformly in a ball of `noise_radius`.
    pub noise_count: usize,
    pub noise_radius: f64,
    /// Distance of the noise group's center from the first ball's center, along the second axis
    /// (the first axis for 1-d data).
    pub noise_offset: f64,
    pub seed: u64,
}

impl BallsSpec {
    pub fn new(seed: u64) -> Self {
        Self {
            balls: 2,
            points_per_ball: 100,
            radius: 2.0,
            center_distance: 10.0,
            dim: 2,
            noise_count: 0,
            noise_radius: 0.0,
            noise_offset: 0.0,
            seed,
        }
    }
}

/// Points along a line whose spacing grows geometrically: a dense head labeled
/// as one cluster followed by an increasingly sparse tail labeled noise.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpec {
    pub points: usize,
    pub cluster_points: usize,
    pub spacing: f64,
    pub growth: f64,
    /// Uniform perpendicular jitter amplitude.
    pub jitter: f64,
    pub seed: u64,
}

impl ChainSpec {
    pub fn new(seed: u64) -> Self {
        Self {
            points: 40,
            cluster_points: 20,
            spacing: 0.1,
            growth: 1.2,
            jitter: 0.0,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    RingsWithNoise(RingsSpec),
    TwoMoons(MoonsSpec),
    UniformBalls(BallsSpec),
    ChainRamp(ChainSpec),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}

fn finite_nonneg(v: f64, name: &str) -> Result<()> {
    need(
        v.is_finite() && v >= 0.0,
        &format!("{name} must be finite and >= 0"),
    )
}

impl GeneratorSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::RingsWithNoise(_) => "rings_with_noise",
            Self::TwoMoons(_) => "two_moons",
            Self::UniformBalls(_) => "uniform_balls",
            Self::ChainRamp(_) => "chain_ramp",
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            Self::RingsWithNoise(s) => s.seed,
            Self::TwoMoons(s) => s.seed,
            Self::UniformBalls(s) => s.seed,
            Self::ChainRamp(s) => s.seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::RingsWithNoise(s) => {
                need(
                    s.rings >= 1 && s.points_per_ring >= 1,
                    "rings and points_per_ring must be >= 1",
                )?;
                finite_nonneg(s.band_width, "band_width")?;
                finite_nonneg(s.noise_margin, "noise_margin")?;
                finite_nonneg(s.noise_padding, "noise_padding")?;
                need(
                    s.inner_radius.is_finite() && s.inner_radius > s.band_width / 2.0,
                    "inner_radius must exceed half the band width",
                )?;
                need(
                    s.rings == 1 || (s.ring_gap.is_finite() && s.ring_gap > s.band_width),
                    "rings overlap: ring_gap must exceed band_width",
                )
            }
            Self::TwoMoons(s) => {
                need(s.points_per_moon >= 1, "points_per_moon must be >= 1")?;
                finite_nonneg(s.jitter, "jitter")
            }
            Self::UniformBalls(s) => {
                need(
                    s.balls >= 1 && s.points_per_ball >= 1 && s.dim >= 1,
                    "balls, points_per_ball and dim must be >= 1",
                )?;
                need(s.radius.is_finite() && s.radius > 0.0, "radius must be > 0")?;
                finite_nonneg(s.center_distance, "center_distance")?;
                finite_nonneg(s.noise_radius, "noise_radius")?;
                need(s.noise_offset.is_finite(), "noise_offset must be finite")
            }
            Self::ChainRamp(s) => {
                need(s.points >= 1, "points must be >= 1")?;
                need(
                    s.cluster_points >= 1 && s.cluster_points <= s.points,
                    "cluster_points must be in 1..=points",
                )?;
                need(
                    s.spacing.is_finite() && s.spacing > 0.0,
                    "spacing must be > 0",
                )?;
                need(s.growth.is_finite() && s.growth > 0.0, "growth must be > 0")?;
                finite_nonneg(s.jitter, "jitter")
            }
        }
    }

    /// Parses `key=value` pairs separated by commas or newlines (`#` starts a comment).
    ///
    /// `kind` and `seed` are mandatory; other keys default as in the `new` constructors.
    pub fn from_kv(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for raw in text.split(['\n', ',']) {
            let item = raw.split('#').next().unwrap_or("").trim();
            if item.is_empty() {
                continue;
            }
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| invalid(format!("expected key=value, got {item:?}")))?;
            pairs.push((k.trim().to_string(), v.trim().to_string()));
        }
        let get = |key: &str| {
            pairs
                .iter()
                .rev()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
        };
        let kind = get("kind").ok_or_else(|| invalid("generator spec needs a kind"))?;
        let seed: u64 = get("seed")
            .ok_or_else(|| invalid("generator spec needs a seed"))?
            .parse()
            .map_err(|_| invalid("seed must be an unsigned integer"))?;

        fn num<T: std::str::FromStr>(v: Option<&str>, key: &str, default: T) -> Result<T> {
            match v {
                None => Ok(default),
                Some(s) => s
                    .parse()
                    .map_err(|_| invalid(format!("invalid value for {key}: {s:?}"))),
            }
        }
        let known: &[&str] = match kind {
            "rings_with_noise" => &[
                "rings",
                "points",
                "noise",
                "inner_radius",
                "ring_gap",
                "band_width",
                "noise_margin",
                "noise_padding",
            ],
            "two_moons" => &["points", "jitter"],
            "uniform_balls" => &[
                "balls",
                "points",
                "radius",
                "distance",
                "dim",
                "noise_count",
                "noise_radius",
                "noise_offset",
            ],
            "chain_ramp" => &["points", "cluster_points", "spacing", "growth", "jitter"],
            other => return Err(invalid(format!("unknown generator kind {other:?}"))),
        };
        if let Some((k, _)) = pairs
            .iter()
            .find(|(k, _)| k != "kind" && k != "seed" && !known.contains(&k.as_str()))
        {
            return Err(invalid(format!("unknown key {k:?} for generator {kind}")));
        }

        let spec = match kind {
            "rings_with_noise" => {
                let d = RingsSpec::new(seed);
                Self::RingsWithNoise(RingsSpec {
                    rings: num(get("rings"), "rings", d.rings)?,
                    points_per_ring: num(get("points"), "points", d.points_per_ring)?,
                    noise: num(get("noise"), "noise", d.noise)?,
                    inner_radius: num(get("inner_radius"), "inner_radius", d.inner_radius)?,
                    ring_gap: num(get("ring_gap"), "ring_gap", d.ring_gap)?,
                    band_width: num(get("band_width"), "band_width", d.band_width)?,
                    noise_margin: num(get("noise_margin"), "noise_margin", d.noise_margin)?,
                    noise_padding: num(get("noise_padding"), "noise_padding", d.noise_padding)?,
                    seed,
                })
            }
            "two_moons" => {
                let d = MoonsSpec::new(seed);
                Self::TwoMoons(MoonsSpec {
                    points_per_moon: num(get("points"), "points", d.points_per_moon)?,
                    jitter: num(get("jitter"), "jitter", d.jitter)?,
                    seed,
                })
            }
            "uniform_balls" => {
                let d = BallsSpec::new(seed);
                Self::UniformBalls(BallsSpec {
                    balls: num(get("balls"), "balls", d.balls)?,
                    points_per_ball: num(get("points"), "points", d.points_per_ball)?,
                    radius: num(get("radius"), "radius", d.radius)?,
                    center_distance: num(get("distance"), "distance", d.center_distance)?,
                    dim: num(get("dim"), "dim", d.dim)?,
                    noise_count: num(get("noise_count"), "noise_count", d.noise_count)?,
                    noise_radius: num(get("noise_radius"), "noise_radius", d.noise_radius)?,
                    noise_offset: num(get("noise_offset"), "noise_offset", d.noise_offset)?,
                    seed,
                })
            }
            _ => {
                let d = ChainSpec::new(seed);
                Self::ChainRamp(ChainSpec {
                    points: num(get("points"), "points", d.points)?,
                    cluster_points: num(get("cluster_points"), "cluster_points", d.cluster_points)?,
                    spacing: num(get("spacing"), "spacing", d.spacing)?,
                    growth: num(get("growth"), "growth", d.growth)?,
                    jitter: num(get("jitter"), "jitter", d.jitter)?,
                    seed,
                })
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Reads a spec from a file if `arg` names one, otherwise parses `arg` inline.
    pub fn from_arg(arg: &str) -> Result<Self> {
        let path = Path::new(arg);
        if !arg.contains('=') && path.exists() {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.to_path_buf(),
                source,
            })?;
            Self::from_kv(&text)
        } else if !arg.contains('=') {
            Err(Error::Io {
                path: path.to_path_buf(),
                source: std::io::Error::new(
                    std::io::ErrorKind::NotFound,
                    "generator spec file not found",
                ),
            })
        } else {
            Self::from_kv(arg)
        }
    }
}

/// Generates the dataset described by `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<(PointSet, Clustering)> {
    match spec {
        GeneratorSpec::RingsWithNoise(s) => gen_rings_with_noise(s),
        GeneratorSpec::TwoMoons(s) => gen_two_moons(s),
        GeneratorSpec::UniformBalls(s) => gen_uniform_balls(s),
        GeneratorSpec::ChainRamp(s) => gen_chain_ramp(s),
    }
}

fn finish(rows: Vec<f64>, dim: usize, labels: Vec<i64>) -> Result<(PointSet, Clustering)> {
    let n = labels.len();
    Ok((
        PointSet::new(rows, n, dim)?,
        Clustering::from_labels(labels)?,
    ))
}

pub fn gen_rings_with_noise(spec: &RingsSpec) -> Result<(PointSet, Clustering)> {
    GeneratorSpec::RingsWithNoise(spec.clone()).validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let half = spec.band_width / 2.0;
    let centers: Vec<f64> = (0..spec.rings)
        .map(|i| spec.inner_radius + i as f64 * spec.ring_gap)
        .collect();
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (ring, &rc) in centers.iter().enumerate() {
        let (lo, hi) = ((rc - half).powi(2), (rc + half).powi(2));
        for _ in 0..spec.points_per_ring {
            let theta = rng.random::<f64>() * 2.0 * PI;
            let r = (lo + rng.random::<f64>() * (hi - lo)).sqrt();
            rows.extend([r * theta.cos(), r * theta.sin()]);
            labels.push(ring as i64);
        }
    }
    let extent = centers.last().copied().unwrap_or(0.0) + spec.noise_padding;
    let clear = half + spec.noise_margin;
    let mut placed = 0;
    let mut attempts = 0usize;
    while placed < spec.noise {
        attempts += 1;
        if attempts > 1000 * (spec.noise + 1) {
            return Err(invalid("could not place noise points off the rings"));
        }
        let x = (rng.random::<f64>() * 2.0 - 1.0) * extent;
        let y = (rng.random::<f64>() * 2.0 - 1.0) * extent;
        let r = x.hypot(y);
        if centers.iter().any(|&rc| (r - rc).abs() < clear) {
            continue;
        }
        rows.extend([x, y]);
        labels.push(NOISE);
        placed += 1;
    }
    finish(rows, 2, labels)
}

pub fn gen_two_moons(spec: &MoonsSpec) -> Result<(PointSet, Clustering)> {
    GeneratorSpec::TwoMoons(spec.clone()).validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.points_per_moon;
    let mut rows = Vec::with_capacity(4 * n);
    let mut labels = Vec::with_capacity(2 * n);
    for moon in 0..2 {
        for i in 0..n {
            let t = if n == 1 {
                0.0
            } else {
                PI * i as f64 / (n - 1) as f64
            };
            let (x, y) = if moon == 0 {
                (t.cos(), t.sin())
            } else {
                (1.0 - t.cos(), 0.5 - t.sin())
            };
            let jx: f64 = StandardNormal.sample(&mut rng);
            let jy: f64 = StandardNormal.sample(&mut rng);
            rows.extend([x + spec.jitter * jx, y + spec.jitter * jy]);
            labels.push(moon as i64);
        }
    }
    finish(rows, 2, labels)
}

fn sample_in_ball(rng: &mut ChaCha8Rng, dim: usize, radius: f64, out: &mut Vec<f64>) {
    if dim == 1 {
        out.push((rng.random::<f64>() * 2.0 - 1.0) * radius);
        return;
    }
    let dir: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
    let norm = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        out.extend(std::iter::repeat_n(0.0, dim));
        return;
    }
    let r = radius * rng.random::<f64>().powf(1.0 / dim as f64);
    out.extend(dir.iter().map(|v| v / norm * r));
}

pub fn gen_uniform_balls(spec: &BallsSpec) -> Result<(PointSet, Clustering)> {
    GeneratorSpec::UniformBalls(spec.clone()).validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let dim = spec.dim;
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    let mut sample = Vec::with_capacity(dim);
    for ball in 0..spec.balls {
        for _ in 0..spec.points_per_ball {
            sample.clear();
            sample_in_ball(&mut rng, dim, spec.radius, &mut sample);
            sample[0] += ball as f64 * spec.center_distance;
            rows.extend_from_slice(&sample);
            labels.push(ball as i64);
        }
    }
    let offset_axis = if dim > 1 { 1 } else { 0 };
    for _ in 0..spec.noise_count {
        sample.clear();
        if spec.noise_radius > 0.0 {
            sample_in_ball(&mut rng, dim, spec.noise_radius, &mut sample);
        } else {
            sample.extend(std::iter::repeat_n(0.0, dim));
        }
        sample[offset_axis] += spec.noise_offset;
        rows.extend_from_slice(&sample);
        labels.push(NOISE);
    }
    finish(rows, dim, labels)
}

pub fn gen_chain_ramp(spec: &ChainSpec) -> Result<(PointSet, Clustering)> {
    GeneratorSpec::ChainRamp(spec.clone()).validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut rows = Vec::with_capacity(2 * spec.points);
    let mut labels = Vec::with_capacity(spec.points);
    let mut x = 0.0;
    let mut gap = spec.spacing;
    for i in 0..spec.points {
        let y = (rng.random::<f64>() * 2.0 - 1.0) * spec.jitter;
        rows.extend([x, y]);
        labels.push(if i < spec.cluster_points { 0 } else { NOISE });
        x += gap;
        if i + 1 >= spec.cluster_points {
            gap *= spec.growth;
        }
    }
    finish(rows, 2, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_counts() {
        let spec = RingsSpec {
            points_per_ring: 100,
            noise: 30,
            ..RingsSpec::new(1)
        };
        let (ps, c) = gen_rings_with_noise(&spec).unwrap();
        assert_eq!(ps.len(), 330);
        assert_eq!(c.cluster_count(), 3);
        assert_eq!(c.noise().len(), 30);
    }

    #[test]
    fn same_seed_same_bytes() {
        for spec in [
            GeneratorSpec::RingsWithNoise(RingsSpec::new(9)),
            GeneratorSpec::TwoMoons(MoonsSpec {
                jitter: 0.1,
                ..MoonsSpec::new(9)
            }),
            GeneratorSpec::UniformBalls(BallsSpec {
                noise_count: 5,
                noise_radius: 1.0,
                noise_offset: 8.0,
                ..BallsSpec::new(9)
            }),
            GeneratorSpec::ChainRamp(ChainSpec {
                jitter: 0.01,
                ..ChainSpec::new(9)
            }),
        ] {
            let a = generate(&spec).unwrap();
            let b = generate(&spec).unwrap();
            let bits = |p: &PointSet| p.as_slice().iter().map(|v| v.to_bits()).collect::<Vec<_>>();
            assert_eq!(bits(&a.0), bits(&b.0), "{}", spec.kind());
            assert_eq!(a.1, b.1);
        }
        let a = gen_two_moons(&MoonsSpec {
            jitter: 0.1,
            ..MoonsSpec::new(1)
        })
        .unwrap();
        let b = gen_two_moons(&MoonsSpec {
            jitter: 0.1,
            ..MoonsSpec::new(2)
        })
        .unwrap();
        assert_ne!(a.0, b.0);
    }

    #[test]
    fn clean_moons_lie_on_half_circles() {
        let (ps, c) = gen_two_moons(&MoonsSpec::new(3)).unwrap();
        for (i, p) in ps.rows().enumerate() {
            let r = if c.label(i) == 0 {
                p[0].hypot(p[1])
            } else {
                (p[0] - 1.0).hypot(p[1] - 0.5)
            };
            assert!((r - 1.0).abs() < 1e-12);
            assert!(if c.label(i) == 0 {
                p[1] >= -1e-12
            } else {
                p[1] <= 0.5 + 1e-12
            });
        }
    }

    #[test]
    fn zero_distance_balls_overlap() {
        let (ps, c) = gen_uniform_balls(&BallsSpec {
            center_distance: 0.0,
            ..BallsSpec::new(4)
        })
        .unwrap();
        assert_eq!(c.cluster_count(), 2);
        assert!(ps.rows().all(|p| p[0].hypot(p[1]) <= 2.0 + 1e-12));
    }

    #[test]
    fn noise_group_is_placed_at_offset() {
        let spec = BallsSpec {
            balls: 1,
            noise_count: 1,
            noise_offset: 5.0,
            ..BallsSpec::new(4)
        };
        let (ps, c) = gen_uniform_balls(&spec).unwrap();
        assert_eq!(c.noise(), &[100]);
        assert_eq!(ps.point(100), &[0.0, 5.0]);
    }

    #[test]
    fn chain_spacing_grows_in_the_tail() {
        let (ps, c) = gen_chain_ramp(&ChainSpec::new(0)).unwrap();
        assert_eq!(c.cluster_count(), 1);
        assert_eq!(c.noise().len(), 20);
        let gaps: Vec<f64> = (1..ps.len())
            .map(|i| ps.point(i)[0] - ps.point(i - 1)[0])
            .collect();
        assert!(gaps[..19].iter().all(|g| (g - 0.1).abs() < 1e-12));
        assert!(gaps[19..].windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn kv_parsing() {
        let spec =
            GeneratorSpec::from_kv("kind=rings_with_noise,rings=2,points=50,noise=10,seed=7")
                .unwrap();
        match &spec {
            GeneratorSpec::RingsWithNoise(s) => {
                assert_eq!(
                    (s.rings, s.points_per_ring, s.noise, s.seed),
                    (2, 50, 10, 7)
                );
            }
            other => panic!("{other:?}"),
        }
        let text = "# balls\nkind = uniform_balls\nseed = 3\ndistance = 4.5\n";
        assert!(
            matches!(GeneratorSpec::from_kv(text).unwrap(), GeneratorSpec::UniformBalls(BallsSpec { center_distance, .. }) if center_distance == 4.5)
        );
        assert!(GeneratorSpec::from_kv("kind=two_moons").is_err());
        assert!(GeneratorSpec::from_kv("kind=spirals,seed=1").is_err());
        assert!(GeneratorSpec::from_kv("kind=two_moons,seed=1,colour=red").is_err());
    }

    #[test]
    fn overlapping_rings_rejected() {
        let spec = RingsSpec {
            band_width: 2.0,
            ..RingsSpec::new(1)
        };
        assert!(matches!(
            gen_rings_with_noise(&spec),
            Err(Error::InvalidParameter(_))
        ));
    }
}
