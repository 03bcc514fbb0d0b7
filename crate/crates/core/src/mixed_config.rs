//! Mixed lattice-path configurations on the half-grid
//! `G_n = {(x, ℓ) : 0 <= x < ℓ <= n}`.
//!
//! A mixed path starts at `(0, i)` and has a Left part made of `E` (east)
//! and `S` (south) steps followed by a Right part made of `F` (east) and `N`
//! (north-east) steps. The vertex shared by both parts is the junction.
//! Step vectors: `E = F = (+1, 0)`, `S = (0, -1)`, `N = (+1, +1)`.
//!
//! Paths are stored as a start vertex and a step sequence; vertices are
//! always derived.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::inv_table::{gen_table, pair_from_table, GenInvTable};
use crate::neutralize::NeutralPair;
use crate::params::OneMinusStats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    S,
    F,
    N,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::E | Step::F => (1, 0),
            Step::S => (0, -1),
            Step::N => (1, 1),
        }
    }

    /// `E` and `S` belong to the Left part.
    pub fn is_left(self) -> bool {
        matches!(self, Step::E | Step::S)
    }

    pub fn letter(self) -> char {
        match self {
            Step::E => 'E',
            Step::S => 'S',
            Step::F => 'F',
            Step::N => 'N',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'E' => Some(Step::E),
            'S' => Some(Step::S),
            'F' => Some(Step::F),
            'N' => Some(Step::N),
            _ => None,
        }
    }
}

/// Grid vertex `(x, level)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub x: i64,
    pub level: i64,
}

impl Vertex {
    pub const fn new(x: i64, level: i64) -> Self {
        Vertex { x, level }
    }

    pub fn step(self, s: Step) -> Vertex {
        let (dx, dl) = s.delta();
        Vertex {
            x: self.x + dx,
            level: self.level + dl,
        }
    }

    pub fn in_grid(self, n: usize) -> bool {
        0 <= self.x && self.x < self.level && self.level <= n as i64
    }

    /// Reflection of a vertex inside its level, `x ↦ level - 1 - x`.
    pub fn mirrored(self) -> Vertex {
        Vertex {
            x: self.level - 1 - self.x,
            level: self.level,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.level)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedPath {
    pub start: Vertex,
    pub steps: Vec<Step>,
}

impl MixedPath {
    pub fn new(start: Vertex, steps: Vec<Step>) -> Self {
        MixedPath { start, steps }
    }

    /// `E^left F^right` starting at `(0, level)`.
    pub fn horizontal(level: usize, left: usize, right: usize) -> Self {
        let mut steps = Vec::with_capacity(left + right);
        steps.extend(core::iter::repeat_n(Step::E, left));
        steps.extend(core::iter::repeat_n(Step::F, right));
        MixedPath {
            start: Vertex::new(0, level as i64),
            steps,
        }
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut v = self.start;
        out.push(v);
        for &s in &self.steps {
            v = v.step(s);
            out.push(v);
        }
        out
    }

    pub fn end(&self) -> Vertex {
        self.steps.iter().fold(self.start, |v, &s| v.step(s))
    }

    /// Number of leading Left steps.
    pub fn left_len(&self) -> usize {
        self.steps.iter().take_while(|s| s.is_left()).count()
    }

    /// Whether every Left step precedes every Right step.
    pub fn parts_ordered(&self) -> bool {
        self.steps[self.left_len()..].iter().all(|s| !s.is_left())
    }

    pub fn junction(&self) -> Vertex {
        self.vertices()[self.left_len()]
    }

    pub fn left_vertices(&self) -> Vec<Vertex> {
        let mut v = self.vertices();
        v.truncate(self.left_len() + 1);
        v
    }

    pub fn right_vertices(&self) -> Vec<Vertex> {
        self.vertices().split_off(self.left_len())
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// `(vertex the step leaves, step)` for every step.
    pub fn step_positions(&self) -> impl Iterator<Item = (Vertex, Step)> + '_ {
        let mut v = self.start;
        self.steps.iter().map(move |&s| {
            let here = v;
            v = v.step(s);
            (here, s)
        })
    }

    /// Steps as a letter string, e.g. `"EESEF"`.
    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }
}

/// `ω_1, ..., ω_n` with `ω_i` starting at `(0, i)`.
///
/// Construction does not validate; [`validate_config`] decides membership.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedConfiguration {
    n: usize,
    paths: Vec<MixedPath>,
}

impl MixedConfiguration {
    pub fn new(n: usize, paths: Vec<MixedPath>) -> Self {
        MixedConfiguration { n, paths }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn paths(&self) -> &[MixedPath] {
        &self.paths
    }

    /// `ω_i`, 1-based.
    pub fn path(&self, i: usize) -> &MixedPath {
        &self.paths[i - 1]
    }

    pub fn count(&self, step: Step) -> usize {
        self.paths.iter().map(|p| p.count(step)).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigIssue {
    PathCount {
        expected: usize,
        found: usize,
    },
    BadStart {
        path: usize,
        start: Vertex,
    },
    /// A Left step follows a Right step.
    PartOrder {
        path: usize,
    },
    OutOfGrid {
        path: usize,
        vertex: Vertex,
    },
    /// The path does not end on a vertex `(ℓ-1, ℓ)`.
    BadEnd {
        path: usize,
        end: Vertex,
    },
    SharedEnd {
        first: usize,
        second: usize,
        end: Vertex,
    },
    LeftIntersection {
        first: usize,
        second: usize,
        vertex: Vertex,
    },
    RightIntersection {
        first: usize,
        second: usize,
        vertex: Vertex,
    },
}

impl fmt::Display for ConfigIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigIssue::PathCount { expected, found } => {
                write!(f, "expected {expected} paths, found {found}")
            }
            ConfigIssue::BadStart { path, start } => write!(f, "path {path} starts at {start}"),
            ConfigIssue::PartOrder { path } => {
                write!(f, "path {path} has a Left step after a Right step")
            }
            ConfigIssue::OutOfGrid { path, vertex } => {
                write!(f, "path {path} leaves the grid at {vertex}")
            }
            ConfigIssue::BadEnd { path, end } => {
                write!(f, "path {path} ends at {end}, not on the diagonal")
            }
            ConfigIssue::SharedEnd { first, second, end } => {
                write!(f, "paths {first} and {second} both end at {end}")
            }
            ConfigIssue::LeftIntersection {
                first,
                second,
                vertex,
            } => {
                write!(
                    f,
                    "Left parts of paths {first} and {second} meet at {vertex}"
                )
            }
            ConfigIssue::RightIntersection {
                first,
                second,
                vertex,
            } => {
                write!(
                    f,
                    "Right parts of paths {first} and {second} meet at {vertex}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConfigReport {
    pub issues: Vec<ConfigIssue>,
    /// `σ(i)` for every path when the endpoints form a permutation.
    pub sigma: Option<Vec<usize>>,
}

impl ConfigReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

fn first_collision(
    parts: impl Iterator<Item = (usize, Vec<Vertex>)>,
) -> Option<(usize, usize, Vertex)> {
    let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut found: Option<(usize, usize, Vertex)> = None;
    for (path, vertices) in parts {
        for v in vertices {
            if let Some(&other) = owner.get(&v) {
                if other != path && found.is_none() {
                    found = Some((other, path, v));
                }
            } else {
                owner.insert(v, path);
            }
        }
    }
    found
}

/// Grid bounds, starts, endpoint permutation, part ordering and both
/// non-intersection conditions.
pub fn validate_config(cfg: &MixedConfiguration) -> ConfigReport {
    let n = cfg.n;
    let mut issues = Vec::new();
    if cfg.paths.len() != n {
        issues.push(ConfigIssue::PathCount {
            expected: n,
            found: cfg.paths.len(),
        });
    }
    let mut sigma = Vec::with_capacity(cfg.paths.len());
    let mut ends: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (idx, path) in cfg.paths.iter().enumerate() {
        let i = idx + 1;
        if path.start != Vertex::new(0, i as i64) {
            issues.push(ConfigIssue::BadStart {
                path: i,
                start: path.start,
            });
        }
        if !path.parts_ordered() {
            issues.push(ConfigIssue::PartOrder { path: i });
        }
        if let Some(v) = path.vertices().into_iter().find(|v| !v.in_grid(n)) {
            issues.push(ConfigIssue::OutOfGrid { path: i, vertex: v });
        }
        let end = path.end();
        if end.x != end.level - 1 || !end.in_grid(n) {
            issues.push(ConfigIssue::BadEnd { path: i, end });
        } else if let Some(&other) = ends.get(&end) {
            issues.push(ConfigIssue::SharedEnd {
                first: other,
                second: i,
                end,
            });
        } else {
            ends.insert(end, i);
            sigma.push(end.level as usize);
        }
    }
    if let Some((first, second, vertex)) = first_collision(
        cfg.paths
            .iter()
            .enumerate()
            .map(|(i, p)| (i + 1, p.left_vertices())),
    ) {
        issues.push(ConfigIssue::LeftIntersection {
            first,
            second,
            vertex,
        });
    }
    if let Some((first, second, vertex)) = first_collision(
        cfg.paths
            .iter()
            .enumerate()
            .map(|(i, p)| (i + 1, p.right_vertices())),
    ) {
        issues.push(ConfigIssue::RightIntersection {
            first,
            second,
            vertex,
        });
    }
    let sigma = (sigma.len() == n && cfg.paths.len() == n).then_some(sigma);
    ConfigReport { issues, sigma }
}

fn repeat(step: Step, count: usize) -> impl Iterator<Item = Step> {
    core::iter::repeat_n(step, count)
}

/// Configuration encoding a valid generalized inversion table.
pub fn config_from_table(t: &GenInvTable) -> Result<MixedConfiguration> {
    t.check()?;
    let n = t.order();
    let k = t.k;
    let paths = (1..=n)
        .map(|i| {
            let a = t.at(i);
            if i == k - 1 {
                let steps = repeat(Step::E, a)
                    .chain(repeat(Step::F, t.beta))
                    .chain(repeat(Step::N, 1))
                    .chain(repeat(Step::F, k - 2 - a - t.beta))
                    .collect();
                MixedPath::new(Vertex::new(0, i as i64), steps)
            } else if i == k {
                let steps = repeat(Step::E, a)
                    .chain(repeat(Step::S, 1))
                    .chain(repeat(Step::E, t.b))
                    .chain(repeat(Step::F, k - 2 - a - t.b))
                    .collect();
                MixedPath::new(Vertex::new(0, i as i64), steps)
            } else {
                MixedPath::horizontal(i, a, i - 1 - a)
            }
        })
        .collect();
    Ok(MixedConfiguration::new(n, paths))
}

/// `Φ(N, E)`.
pub fn phi(pair: &NeutralPair) -> MixedConfiguration {
    config_from_table(&gen_table(pair)).expect("tables of neutral pairs are valid")
}

fn malformed(detail: impl Into<String>) -> Error {
    Error::MalformedConfiguration(detail.into())
}

fn require_valid(cfg: &MixedConfiguration) -> Result<ConfigReport> {
    let report = validate_config(cfg);
    match report.issues.first() {
        Some(issue) => Err(malformed(format!("{issue}"))),
        None => Ok(report),
    }
}

/// Index `k` such that `ω_{k-1}` holds the single N-step.
fn special_index(cfg: &MixedConfiguration) -> Result<usize> {
    let count = cfg.count(Step::N);
    if count != 1 {
        return Err(Error::NotOneNStep { count });
    }
    let k = cfg
        .paths
        .iter()
        .position(|p| p.count(Step::N) == 1)
        .expect("one N-step")
        + 2;
    if k > cfg.n || cfg.count(Step::S) != 1 || cfg.path(k).count(Step::S) != 1 {
        return Err(malformed(
            "the S-step must lie in the path right after the N-step",
        ));
    }
    Ok(k)
}

fn leading(steps: &[Step], step: Step) -> usize {
    steps.iter().take_while(|&&s| s == step).count()
}

/// Reads `(k; a; b, β)` off the step runs of a configuration in `M(n,1)`.
pub fn config_table(cfg: &MixedConfiguration) -> Result<GenInvTable> {
    let k = special_index(cfg)?;
    require_valid(cfg)?;
    let a = (1..=cfg.n)
        .map(|i| leading(&cfg.path(i).steps, Step::E))
        .collect::<Vec<_>>();
    let special = &cfg.path(k - 1).steps;
    let beta = leading(&special[a[k - 2]..], Step::F);
    let with_s = &cfg.path(k).steps;
    let b = leading(&with_s[a[k - 1] + 1..], Step::E);
    let t = GenInvTable { k, a, b, beta };
    t.check().map_err(|e| malformed(format!("{e}")))?;
    if config_from_table(&t)? != *cfg {
        return Err(malformed(
            "path shapes do not match a generalized inversion table",
        ));
    }
    Ok(t)
}

/// `Φ⁻¹(Ω)`.
pub fn phi_inv(cfg: &MixedConfiguration) -> Result<NeutralPair> {
    pair_from_table(&config_table(cfg)?)
}

/// `(r, i, E, B, J)` read geometrically from a configuration in `M(n,1)`.
///
/// `r` counts E-steps on level `n`, `i` counts E- and N-steps, `E` is the
/// signed distance from the start of the S-step to the end of the N-step and
/// `J` the distance between the junctions of `ω_{k-1}` and `ω_k`.
pub fn config_params(cfg: &MixedConfiguration) -> Result<OneMinusStats> {
    let k = special_index(cfg)?;
    require_valid(cfg)?;
    let n = cfg.n as i64;
    let mut r = 0;
    let mut inversions = 0;
    let mut s_start = None;
    let mut n_end = None;
    for path in &cfg.paths {
        for (v, s) in path.step_positions() {
            match s {
                Step::E => {
                    inversions += 1;
                    if v.level == n {
                        r += 1;
                    }
                }
                Step::N => {
                    inversions += 1;
                    n_end = Some(v.step(s));
                }
                Step::S => s_start = Some(v),
                Step::F => {}
            }
        }
    }
    let (s_start, n_end) = (s_start.expect("one S-step"), n_end.expect("one N-step"));
    if s_start.level != n_end.level {
        return Err(malformed(
            "S-step start and N-step end lie on different levels",
        ));
    }
    let special = cfg.path(k - 1);
    let with_s = cfg.path(k);
    let beta = leading(&special.steps[special.left_len()..], Step::F) as i64;
    let b = leading(
        &with_s.steps[leading(&with_s.steps, Step::E) + 1..],
        Step::E,
    ) as i64;
    Ok(OneMinusStats {
        r,
        i: inversions,
        e: n_end.x - s_start.x,
        b: b - beta,
        j: special.junction().x.abs_diff(with_s.junction().x) as usize,
    })
}

/// Gessel–Viennot dual: junctions, S-step starts and N-step ends are
/// mirrored inside their level and the paths are redrawn through them.
pub fn gv_dual(cfg: &MixedConfiguration) -> Result<MixedConfiguration> {
    require_valid(cfg)?;
    let n = cfg.n;
    let mut junctions = BTreeSet::new();
    let mut s_starts = BTreeSet::new();
    let mut n_ends = BTreeSet::new();
    for path in &cfg.paths {
        junctions.insert(path.junction().mirrored());
        for (v, s) in path.step_positions() {
            match s {
                Step::S => {
                    s_starts.insert(v.mirrored());
                }
                Step::N => {
                    n_ends.insert(v.step(s).mirrored());
                }
                _ => {}
            }
        }
    }
    let budget = 2 * n + 2;
    let mut paths = Vec::with_capacity(n);
    for i in 1..=n {
        let mut v = Vertex::new(0, i as i64);
        let mut steps = Vec::new();
        while !junctions.contains(&v) {
            let s = if s_starts.contains(&v) {
                Step::S
            } else {
                Step::E
            };
            v = v.step(s);
            steps.push(s);
            if !v.in_grid(n) || steps.len() > budget {
                return Err(malformed(format!(
                    "dual Left part of path {i} leaves the grid"
                )));
            }
        }
        loop {
            let s = if n_ends.contains(&v.step(Step::N)) {
                Step::N
            } else if v.x == v.level - 1 {
                break;
            } else {
                Step::F
            };
            v = v.step(s);
            steps.push(s);
            if !v.in_grid(n) || steps.len() > budget {
                return Err(malformed(format!(
                    "dual Right part of path {i} leaves the grid"
                )));
            }
        }
        paths.push(MixedPath::new(Vertex::new(0, i as i64), steps));
    }
    let dual = MixedConfiguration::new(n, paths);
    require_valid(&dual)?;
    Ok(dual)
}
