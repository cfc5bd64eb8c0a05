//! Rational Dyck paths and their statistics.
//!
//! An `(m,n)`-Dyck path walks from `(0,0)` to `(m,n)` in unit horizontal and
//! vertical steps while staying weakly above the diagonal `y = (n/m)x`. All
//! geometry here is exact integer arithmetic through the linear form
//! `f(x,y) = n*x - m*y`: a point is weakly above the diagonal iff `f <= 0`,
//! and lines parallel to the diagonal are the level sets of `f`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::util::gcd;

/// Hard cap on either extent. Enumeration is hopeless long before this, but a
/// cap keeps every derived quantity comfortably inside `i64`.
pub const MAX_EXTENT: u32 = 1 << 20;

/// A validated coprime pair `(m,n)`: horizontal extent `m`, vertical extent
/// (and braid strand count) `n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct TorusShape {
    m: u32,
    n: u32,
}

impl TorusShape {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape {
                m,
                n,
                reason: "extents must be positive",
            });
        }
        if m > MAX_EXTENT || n > MAX_EXTENT {
            return Err(Error::InvalidShape {
                m,
                n,
                reason: "extent too large",
            });
        }
        if gcd(u64::from(m), u64::from(n)) != 1 {
            return Err(Error::InvalidShape {
                m,
                n,
                reason: "extents must be coprime",
            });
        }
        Ok(TorusShape { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of strands of the toric braid.
    pub fn strands(&self) -> u32 {
        self.n
    }

    /// Exponent sum `e = m(n-1)` of the toric braid.
    pub fn exponent_sum(&self) -> i64 {
        i64::from(self.m) * (i64::from(self.n) - 1)
    }

    /// Lower degree bound `e - n + 1 = (m-1)(n-1)` for alpha.
    pub fn alpha_lower(&self) -> i64 {
        (i64::from(self.m) - 1) * (i64::from(self.n) - 1)
    }

    /// Upper degree bound `e + n - 1 = (m+1)(n-1)` for alpha.
    pub fn alpha_upper(&self) -> i64 {
        (i64::from(self.m) + 1) * (i64::from(self.n) - 1)
    }

    /// `binomial(m+n, n) / (m+n)`, the rational Catalan count of paths.
    pub fn catalan_count(&self) -> Result<u64> {
        let overflow = Error::CountOverflow {
            m: self.m,
            n: self.n,
        };
        let a = u128::from(self.m) + u128::from(self.n);
        let b = u128::from(self.n.min(self.m));
        let mut binom: u128 = 1;
        for i in 1..=b {
            binom = binom.checked_mul(a - b + i).ok_or(Error::CountOverflow {
                m: self.m,
                n: self.n,
            })?;
            binom /= i; // exact: prefix products of the multiplicative formula
        }
        if !binom.is_multiple_of(a) {
            // unreachable for coprime extents
            return Err(overflow);
        }
        u64::try_from(binom / a).map_err(|_| overflow)
    }

    /// The shape `(m+n, n)` of star images; coprimality is preserved.
    pub fn star_shape(&self) -> TorusShape {
        TorusShape {
            m: self.m + self.n,
            n: self.n,
        }
    }

    /// The shape `(n, m)`.
    pub fn transpose(&self) -> TorusShape {
        TorusShape {
            m: self.n,
            n: self.m,
        }
    }

    /// `f(x,y) = n*x - m*y`; weakly above the diagonal iff `<= 0`.
    pub fn f(&self, x: i64, y: i64) -> i64 {
        i64::from(self.n) * x - i64::from(self.m) * y
    }

    /// `m*y - n*x`, the distance-from-diagonal key (positive above the diagonal).
    pub fn diag_key(&self, x: i64, y: i64) -> i64 {
        -self.f(x, y)
    }
}

impl fmt::Display for TorusShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// One lattice step.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Step {
    /// Vertical step `(0,1)`.
    V,
    /// Horizontal step `(1,0)`.
    H,
}

/// A step with its position and endpoints resolved.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StepRef {
    pub index: usize,
    pub kind: Step,
    pub start: (i64, i64),
    pub end: (i64, i64),
}

impl StepRef {
    /// Closed interval of `f` over the step.
    fn f_interval(&self, shape: TorusShape) -> (i64, i64) {
        let a = shape.f(self.start.0, self.start.1);
        let b = shape.f(self.end.0, self.end.1);
        (a.min(b), a.max(b))
    }
}

/// Which of the two line-overlap regimes a pair falls in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Bucket {
    H1,
    H2,
    None,
}

/// Classification of a (horizontal step, later vertical step) pair by the
/// discriminant `D = n(a'-a) - m(b'-b)`, where the horizontal step ends at
/// `(a,b)` and the vertical step starts at `(a',b')`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PairClassification {
    pub d: i64,
    pub bucket: Bucket,
}

/// Classify a pair from `O(path)` by the strict inequalities
/// `-n < D < m-n` (H1) and `m-n < D < m` (H2). The boundary values
/// `D = -n, m-n, m` never occur for pairs of a valid path.
pub fn classify_pair(shape: TorusShape, rh: &StepRef, rv: &StepRef) -> PairClassification {
    debug_assert_eq!(rh.kind, Step::H);
    debug_assert_eq!(rv.kind, Step::V);
    let (a, b) = rh.end;
    let (ap, bp) = rv.start;
    let m = i64::from(shape.m());
    let n = i64::from(shape.n());
    let d = n * (ap - a) - m * (bp - b);
    let bucket = if -n < d && d < m - n {
        Bucket::H1
    } else if m - n < d && d < m {
        Bucket::H2
    } else {
        Bucket::None
    };
    PairClassification { d, bucket }
}

/// True iff some line parallel to the diagonal meets both steps, i.e. the
/// closed `f`-intervals of the two steps overlap.
pub fn geometric_h(shape: TorusShape, rh: &StepRef, rv: &StepRef) -> bool {
    let (h_lo, h_hi) = rh.f_interval(shape);
    let (v_lo, v_hi) = rv.f_interval(shape);
    h_lo <= v_hi && v_lo <= h_hi
}

/// An outer vertex: a lattice point just after a vertical step and just
/// before a horizontal step, with its line-counting statistics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OuterVertex {
    pub point: (i64, i64),
    /// Steps (horizontal, equivalently vertical) met by the parallel line
    /// through the point, the two incident steps excluded.
    pub k: u64,
    /// Vertical steps after the point meeting the line.
    pub k1: u64,
    /// Horizontal steps before the point meeting the line.
    pub k2: u64,
    /// `m*y - n*x`; strictly positive and distinct across outer vertices.
    pub diag_key: i64,
}

/// An `(m,n)`-Dyck path. Always valid by construction: the step multiset
/// matches the shape and every visited lattice point satisfies `f <= 0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct DyckPath {
    shape: TorusShape,
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(shape: TorusShape, steps: Vec<Step>) -> Result<Self> {
        let (m, n) = (shape.m() as usize, shape.n() as usize);
        if steps.len() != m + n {
            return Err(Error::InvalidPath(format!(
                "expected {} steps for shape {shape}, got {}",
                m + n,
                steps.len()
            )));
        }
        let vs = steps.iter().filter(|s| **s == Step::V).count();
        if vs != n {
            return Err(Error::InvalidPath(format!(
                "expected {n} vertical steps for shape {shape}, got {vs}"
            )));
        }
        let (mut x, mut y) = (0i64, 0i64);
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::V => y += 1,
                Step::H => x += 1,
            }
            if shape.f(x, y) > 0 {
                return Err(Error::InvalidPath(format!(
                    "step {i} reaches ({x},{y}), below the diagonal of {shape}"
                )));
            }
        }
        Ok(DyckPath { shape, steps })
    }

    /// Parse a string over `{V,H}` such as `"VVHVHHVHH"`.
    pub fn parse(shape: TorusShape, text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .map(|c| match c {
                'V' => Ok(Step::V),
                'H' => Ok(Step::H),
                other => Err(Error::InvalidPath(format!(
                    "unexpected step character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(shape, steps)
    }

    pub fn shape(&self) -> TorusShape {
        self.shape
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn step_string(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::V => 'V',
                Step::H => 'H',
            })
            .collect()
    }

    /// All steps with resolved endpoints, in path order.
    pub fn step_refs(&self) -> Vec<StepRef> {
        let mut out = Vec::with_capacity(self.steps.len());
        let (mut x, mut y) = (0i64, 0i64);
        for (index, &kind) in self.steps.iter().enumerate() {
            let start = (x, y);
            match kind {
                Step::V => y += 1,
                Step::H => x += 1,
            }
            out.push(StepRef {
                index,
                kind,
                start,
                end: (x, y),
            });
        }
        out
    }

    /// Complete unit squares strictly above the diagonal and weakly below the
    /// path. The square with corners `(x,y)..(x+1,y+1)` qualifies iff
    /// `n(x+1) - m*y <= 0` and the path passes weakly above its top edge.
    pub fn area(&self) -> u64 {
        let m = i64::from(self.shape.m());
        let n = i64::from(self.shape.n());
        let mut area = 0u64;
        let mut y = 0i64;
        let mut col = 0i64;
        for &s in &self.steps {
            match s {
                Step::V => y += 1,
                Step::H => {
                    // Height of the path over column [col, col+1] is y.
                    // Qualifying squares have y0 in [ceil(n(col+1)/m), y-1].
                    let y_min = (n * (col + 1) + m - 1).div_euclid(m);
                    if y > y_min {
                        area += (y - y_min) as u64;
                    }
                    col += 1;
                }
            }
        }
        area
    }

    /// The same area through the pair count: `(m-1)(n-1)/2 - |O|`.
    pub fn area_via_lemma1(&self) -> u64 {
        let half = self.shape.alpha_lower(); // (m-1)(n-1), always even here
        debug_assert_eq!(half % 2, 0);
        let o = self.pairs_o().len() as i64;
        let v = half / 2 - o;
        u64::try_from(v).expect("pair count exceeds (m-1)(n-1)/2 on a valid path")
    }

    /// All ordered pairs (horizontal step, vertical step appearing later).
    pub fn pairs_o(&self) -> Vec<(StepRef, StepRef)> {
        let refs = self.step_refs();
        let mut out = Vec::new();
        for rh in refs.iter().filter(|r| r.kind == Step::H) {
            for rv in refs
                .iter()
                .filter(|r| r.kind == Step::V && r.index > rh.index)
            {
                out.push((*rh, *rv));
            }
        }
        out
    }

    /// `h = |H1| + |H2|` over the pairs of `O`.
    pub fn h_statistic(&self) -> u64 {
        let shape = self.shape;
        let mut h = 0u64;
        for (rh, rv) in self.pairs_o() {
            let class = classify_pair(shape, &rh, &rv);
            debug_assert_eq!(
                class.bucket != Bucket::None,
                geometric_h(shape, &rh, &rv),
                "bucket test disagrees with line overlap on {}",
                self.step_string()
            );
            if class.bucket != Bucket::None {
                h += 1;
            }
        }
        h
    }

    /// Indices `i` such that step `i` is vertical and step `i+1` horizontal,
    /// with the junction point, in path order.
    fn junctions(&self) -> Vec<(usize, (i64, i64))> {
        let mut out = Vec::new();
        let (mut x, mut y) = (0i64, 0i64);
        for (i, &s) in self.steps.iter().enumerate() {
            match s {
                Step::V => y += 1,
                Step::H => x += 1,
            }
            if s == Step::V && self.steps.get(i + 1) == Some(&Step::H) {
                out.push((i, (x, y)));
            }
        }
        out
    }

    /// Number of outer vertices, i.e. vertical-to-horizontal junctions.
    pub fn outer_vertex_count(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == Step::V && w[1] == Step::H)
            .count()
    }

    /// A path is rugged iff it has `n` outer vertices (`|V| = n-1`), which for
    /// a valid path means every vertical step is immediately followed by a
    /// horizontal one.
    pub fn is_rugged(&self) -> bool {
        self.outer_vertex_count() == self.shape.n() as usize
    }

    /// The most distant outer vertex `p0` and the remaining outer vertices
    /// `V`, the latter in path order. Every valid path has at least one outer
    /// vertex, and coprimality makes the distance keys distinct, so `p0` is
    /// unique.
    pub fn outer_vertices(&self) -> (OuterVertex, Vec<OuterVertex>) {
        let refs = self.step_refs();
        let junctions = self.junctions();
        assert!(
            !junctions.is_empty(),
            "a valid path starts with V and ends with H"
        );
        let mut vertices = Vec::with_capacity(junctions.len());
        for &(v_index, point) in &junctions {
            let (k, k1, k2) = self.k_counts_at(&refs, v_index, point);
            let diag_key = self.shape.diag_key(point.0, point.1);
            assert!(diag_key > 0, "outer vertex on the diagonal");
            vertices.push(OuterVertex {
                point,
                k,
                k1,
                k2,
                diag_key,
            });
        }
        let max_key = vertices.iter().map(|v| v.diag_key).max().unwrap();
        let ties = vertices.iter().filter(|v| v.diag_key == max_key).count();
        assert_eq!(ties, 1, "distance keys must be distinct by coprimality");
        let pos = vertices.iter().position(|v| v.diag_key == max_key).unwrap();
        let p0 = vertices.remove(pos);
        debug_assert_eq!(p0.k, 0, "the most distant outer vertex meets no other step");
        (p0, vertices)
    }

    /// `(k, k1, k2)` for an outer vertex given as a point.
    pub fn k_counts(&self, point: (i64, i64)) -> Result<(u64, u64, u64)> {
        let junction = self
            .junctions()
            .into_iter()
            .find(|&(_, p)| p == point)
            .ok_or(Error::NotOuterVertex {
                x: point.0,
                y: point.1,
            })?;
        let refs = self.step_refs();
        Ok(self.k_counts_at(&refs, junction.0, point))
    }

    /// Count the steps met by the parallel line through the junction point,
    /// excluding the two steps incident there (the vertical step `v_index`
    /// and the horizontal step `v_index + 1`). Counting horizontal steps or
    /// vertical steps must agree.
    fn k_counts_at(&self, refs: &[StepRef], v_index: usize, point: (i64, i64)) -> (u64, u64, u64) {
        let shape = self.shape;
        let level = shape.f(point.0, point.1);
        let meets = |r: &StepRef| {
            let (lo, hi) = r.f_interval(shape);
            lo <= level && level <= hi
        };
        let mut k_h = 0u64;
        let mut k_v = 0u64;
        let mut k1 = 0u64;
        let mut k2 = 0u64;
        for r in refs {
            if r.index == v_index || r.index == v_index + 1 || !meets(r) {
                continue;
            }
            match r.kind {
                Step::H => {
                    k_h += 1;
                    if r.index < v_index {
                        k2 += 1;
                    }
                }
                Step::V => {
                    k_v += 1;
                    if r.index > v_index {
                        k1 += 1;
                    }
                }
            }
        }
        assert_eq!(k_h, k_v, "horizontal and vertical line counts must agree");
        debug_assert_eq!(k_h, k1 + k2);
        (k_h, k1, k2)
    }

    /// Insert one horizontal step just after each vertical step, landing in
    /// the shape `(m+n, n)`. The image is always rugged.
    pub fn star(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + self.shape.n() as usize);
        for &s in &self.steps {
            steps.push(s);
            if s == Step::V {
                steps.push(Step::H);
            }
        }
        DyckPath::new(self.shape.star_shape(), steps).expect("star image of a valid path is valid")
    }

    /// Inverse of `star`: delete the horizontal step immediately after each
    /// vertical step. Fails on paths that are not star images.
    pub fn unstar(&self) -> Result<DyckPath> {
        let (m, n) = (self.shape.m(), self.shape.n());
        if m <= n {
            return Err(Error::UnstarShape { m, n });
        }
        let mut steps = Vec::with_capacity(self.steps.len() - n as usize);
        let mut i = 0;
        while i < self.steps.len() {
            match self.steps[i] {
                Step::H => {
                    steps.push(Step::H);
                    i += 1;
                }
                Step::V => {
                    if self.steps.get(i + 1) != Some(&Step::H) {
                        return Err(Error::NotStarImage { index: i });
                    }
                    steps.push(Step::V);
                    i += 2;
                }
            }
        }
        let shape = TorusShape::new(m - n, n)?;
        DyckPath::new(shape, steps)
    }

    /// Step-index map induced by `star`: original step `j` lands at
    /// `j +` (number of vertical steps before `j`).
    pub fn star_index_map(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut vs = 0usize;
        for &s in &self.steps {
            out.push(out.len() + vs);
            if s == Step::V {
                vs += 1;
            }
        }
        out
    }

    /// JSON-facing record; statistics are filled in on request.
    pub fn record(&self, stats: bool) -> PathRecord {
        let mut rec = PathRecord {
            m: self.shape.m(),
            n: self.shape.n(),
            steps: self.step_string(),
            area: None,
            h: None,
            p0: None,
            outer: None,
            rugged: None,
        };
        if stats {
            let (p0, vs) = self.outer_vertices();
            rec.area = Some(self.area());
            rec.h = Some(self.h_statistic());
            rec.p0 = Some([p0.point.0, p0.point.1]);
            rec.outer = Some(
                vs.iter()
                    .map(|v| OuterRecord {
                        p: [v.point.0, v.point.1],
                        k: v.k,
                    })
                    .collect(),
            );
            rec.rugged = Some(self.is_rugged());
        }
        rec
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.step_string())
    }
}

/// One outer-vertex entry of a path record.
#[derive(Serialize, Debug, Clone)]
pub struct OuterRecord {
    pub p: [i64; 2],
    pub k: u64,
}

/// JSON record for one path, e.g.
/// `{"m":5,"n":4,"steps":"VVHVHHVHH","area":2,"h":4,"p0":[1,3],"V":[...],"rugged":false}`.
#[derive(Serialize, Debug, Clone)]
pub struct PathRecord {
    pub m: u32,
    pub n: u32,
    pub steps: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub area: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p0: Option<[i64; 2]>,
    #[serde(rename = "V", skip_serializing_if = "Option::is_none")]
    pub outer: Option<Vec<OuterRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rugged: Option<bool>,
}

/// Depth-first enumeration of `(m,n)`-Dyck paths in lexicographic order with
/// `V` before `H`, pruned by the diagonal test. With `rugged_only` the search
/// additionally forces a horizontal step after every vertical one, which
/// yields exactly the rugged paths in the same relative order as filtering
/// the full enumeration.
pub struct PathIter {
    shape: TorusShape,
    rugged_only: bool,
    total: usize,
    steps: Vec<Step>,
    x: i64,
    y: i64,
    v_used: u32,
    h_used: u32,
    agenda: Vec<(usize, Step)>,
}

impl PathIter {
    fn new(shape: TorusShape, rugged_only: bool) -> Self {
        PathIter {
            shape,
            rugged_only,
            total: (shape.m() + shape.n()) as usize,
            steps: Vec::with_capacity((shape.m() + shape.n()) as usize),
            x: 0,
            y: 0,
            v_used: 0,
            h_used: 0,
            agenda: vec![(0, Step::V)],
        }
    }

    fn truncate_to(&mut self, depth: usize) {
        while self.steps.len() > depth {
            match self.steps.pop().unwrap() {
                Step::V => {
                    self.y -= 1;
                    self.v_used -= 1;
                }
                Step::H => {
                    self.x -= 1;
                    self.h_used -= 1;
                }
            }
        }
    }

    fn feasible(&self, step: Step) -> bool {
        match step {
            Step::V => {
                self.v_used < self.shape.n()
                    && !(self.rugged_only && self.steps.last() == Some(&Step::V))
            }
            Step::H => self.h_used < self.shape.m() && self.shape.f(self.x + 1, self.y) <= 0,
        }
    }

    fn push(&mut self, step: Step) {
        match step {
            Step::V => {
                self.y += 1;
                self.v_used += 1;
            }
            Step::H => {
                self.x += 1;
                self.h_used += 1;
            }
        }
        self.steps.push(step);
    }
}

impl Iterator for PathIter {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        while let Some((depth, step)) = self.agenda.pop() {
            self.truncate_to(depth);
            if step == Step::V {
                // The H branch at this depth runs after the V subtree.
                self.agenda.push((depth, Step::H));
            }
            if !self.feasible(step) {
                continue;
            }
            self.push(step);
            if self.steps.len() == self.total {
                let path = DyckPath {
                    shape: self.shape,
                    steps: self.steps.clone(),
                };
                debug_assert!(!self.rugged_only || path.is_rugged());
                return Some(path);
            }
            self.agenda.push((depth + 1, Step::V));
        }
        None
    }
}

/// All `(m,n)`-Dyck paths in canonical order.
pub fn enumerate(shape: TorusShape) -> PathIter {
    PathIter::new(shape, false)
}

/// The rugged `(m,n)`-Dyck paths in canonical order.
pub fn enumerate_rugged(shape: TorusShape) -> PathIter {
    PathIter::new(shape, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(m: u32, n: u32) -> TorusShape {
        TorusShape::new(m, n).unwrap()
    }

    fn path(m: u32, n: u32, s: &str) -> DyckPath {
        DyckPath::parse(shape(m, n), s).unwrap()
    }

    fn figure1() -> DyckPath {
        path(5, 4, "VVHVHHVHH")
    }

    fn figure2() -> DyckPath {
        path(9, 4, "VHVHHVHHHVHHH")
    }

    fn strings(iter: PathIter) -> Vec<String> {
        iter.map(|p| p.step_string()).collect()
    }

    /// Brute-force oracle: all step orders, filtered by a direct diagonal
    /// check, in the same lexicographic (V before H) order.
    fn brute_force(m: u32, n: u32) -> Vec<String> {
        fn rec(m: i64, n: i64, x: i64, y: i64, prefix: &mut String, out: &mut Vec<String>) {
            if x == m && y == n {
                out.push(prefix.clone());
                return;
            }
            if y < n && n * x - m * (y + 1) <= 0 {
                prefix.push('V');
                rec(m, n, x, y + 1, prefix, out);
                prefix.pop();
            }
            if x < m && n * (x + 1) - m * y <= 0 {
                prefix.push('H');
                rec(m, n, x + 1, y, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(m as i64, n as i64, 0, 0, &mut String::new(), &mut out);
        out
    }

    #[test]
    fn shape_validation() {
        assert!(TorusShape::new(2, 2).is_err());
        assert!(TorusShape::new(6, 4).is_err());
        assert!(TorusShape::new(0, 3).is_err());
        assert!(TorusShape::new(3, 0).is_err());
        assert!(TorusShape::new(1, 1).is_ok());
        assert!(TorusShape::new(12, 7).is_ok());
    }

    #[test]
    fn shape_derived_statistics() {
        let s = shape(3, 2);
        assert_eq!(s.exponent_sum(), 3);
        assert_eq!(s.alpha_lower(), 2);
        assert_eq!(s.alpha_upper(), 4);
        assert_eq!(s.star_shape(), shape(5, 2));
    }

    #[test]
    fn enumerate_smallest_shapes() {
        assert_eq!(strings(enumerate(shape(1, 1))), vec!["VH"]);
        assert_eq!(strings(enumerate(shape(3, 2))), vec!["VVHHH", "VHVHH"]);
        assert_eq!(strings(enumerate(shape(2, 3))), vec!["VVVHH", "VVHVH"]);
    }

    #[test]
    fn enumerate_matches_brute_force() {
        for (m, n) in [
            (1, 1),
            (3, 2),
            (2, 3),
            (5, 4),
            (4, 5),
            (7, 3),
            (5, 1),
            (1, 5),
        ] {
            assert_eq!(
                strings(enumerate(shape(m, n))),
                brute_force(m, n),
                "shape ({m},{n})"
            );
        }
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate(shape(5, 4)).count() as u64, 14);
        assert_eq!(shape(5, 4).catalan_count().unwrap(), 14);
        assert_eq!(shape(3, 2).catalan_count().unwrap(), 2);
        assert_eq!(shape(15, 1).catalan_count().unwrap(), 1);
    }

    #[test]
    fn path_validation_errors() {
        assert!(DyckPath::parse(shape(3, 2), "VVHH").is_err()); // wrong length
        assert!(DyckPath::parse(shape(3, 2), "VVVHH").is_err()); // wrong counts
        assert!(DyckPath::parse(shape(3, 2), "HVVHH").is_err()); // dips below
        assert!(DyckPath::parse(shape(3, 2), "VVHXH").is_err()); // bad char
    }

    #[test]
    fn area_examples() {
        assert_eq!(figure1().area(), 2);
        assert_eq!(path(3, 2, "VVHHH").area(), 1);
        assert_eq!(path(3, 2, "VHVHH").area(), 0);
    }

    #[test]
    fn area_via_lemma1_examples() {
        assert_eq!(path(3, 2, "VVHHH").area_via_lemma1(), 1);
        assert_eq!(path(3, 2, "VHVHH").area_via_lemma1(), 0);
        let fig1 = figure1();
        assert_eq!(fig1.pairs_o().len(), 4);
        assert_eq!(fig1.area_via_lemma1(), 2);
    }

    #[test]
    fn pairs_o_examples() {
        assert!(path(3, 2, "VVHHH").pairs_o().is_empty());
        let p = path(3, 2, "VHVHH");
        let pairs = p.pairs_o();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0.index, 1);
        assert_eq!(pairs[0].1.index, 2);
    }

    #[test]
    fn pairs_o_star_growth() {
        // |O(star(p))| = |O(p)| + n(n-1)/2
        let p = path(1, 2, "VVH");
        assert_eq!(p.pairs_o().len(), 0);
        assert_eq!(p.star().pairs_o().len(), 1);
        let fig1 = figure1();
        assert_eq!(
            fig1.star().pairs_o().len(),
            fig1.pairs_o().len() + 4 * 3 / 2
        );
    }

    #[test]
    fn classify_pair_examples() {
        let p = path(3, 2, "VHVHH");
        let pairs = p.pairs_o();
        let class = classify_pair(p.shape(), &pairs[0].0, &pairs[0].1);
        assert_eq!(class.d, 0);
        assert_eq!(class.bucket, Bucket::H1);

        let p = path(2, 3, "VVHVH");
        let pairs = p.pairs_o();
        let class = classify_pair(p.shape(), &pairs[0].0, &pairs[0].1);
        assert_eq!(class.d, 0);
        assert_eq!(class.bucket, Bucket::H2);

        assert!(path(3, 2, "VVHHH").pairs_o().is_empty());
    }

    #[test]
    fn h_statistic_examples() {
        assert_eq!(figure1().h_statistic(), 4);
        assert_eq!(path(3, 2, "VHVHH").h_statistic(), 1);
        assert_eq!(path(3, 2, "VVHHH").h_statistic(), 0);
        assert_eq!(figure2().h_statistic(), 10);
    }

    #[test]
    fn geometric_h_examples() {
        let p = path(3, 2, "VHVHH");
        let pairs = p.pairs_o();
        assert!(geometric_h(p.shape(), &pairs[0].0, &pairs[0].1));

        let p = path(2, 3, "VVHVH");
        let pairs = p.pairs_o();
        assert!(geometric_h(p.shape(), &pairs[0].0, &pairs[0].1));
    }

    #[test]
    fn outer_vertices_figure1() {
        let (p0, vs) = figure1().outer_vertices();
        assert_eq!(p0.point, (1, 3));
        assert_eq!(p0.k, 0);
        let points: Vec<_> = vs.iter().map(|v| v.point).collect();
        assert_eq!(points, vec![(0, 2), (3, 4)]);
        assert_eq!(vs[0].k, 1);
        assert_eq!(vs[1].k, 2);
    }

    #[test]
    fn outer_vertices_small() {
        let (p0, vs) = path(3, 2, "VVHHH").outer_vertices();
        assert_eq!(p0.point, (0, 2));
        assert!(vs.is_empty());

        let (p0, vs) = path(3, 2, "VHVHH").outer_vertices();
        assert_eq!(p0.point, (1, 2));
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].point, (0, 1));
        assert_eq!(vs[0].k, 1);
    }

    #[test]
    fn k_counts_examples() {
        let fig1 = figure1();
        assert_eq!(fig1.k_counts((0, 2)).unwrap().0, 1);
        assert_eq!(fig1.k_counts((3, 4)).unwrap().0, 2);
        assert_eq!(fig1.k_counts((1, 3)).unwrap(), (0, 0, 0)); // p0
        assert!(fig1.k_counts((0, 0)).is_err());
        assert_eq!(path(3, 2, "VHVHH").k_counts((0, 1)).unwrap().0, 1);
    }

    #[test]
    fn k_counts_figure2_split() {
        let fig2 = figure2();
        let (p0, vs) = fig2.outer_vertices();
        assert_eq!(p0.point, (3, 3));
        let by_point: std::collections::BTreeMap<(i64, i64), (u64, u64, u64)> =
            vs.iter().map(|v| (v.point, (v.k, v.k1, v.k2))).collect();
        assert_eq!(by_point[&(0, 1)], (3, 3, 0));
        assert_eq!(by_point[&(1, 2)], (1, 1, 0));
        assert_eq!(by_point[&(6, 4)], (2, 0, 2));
    }

    #[test]
    fn rugged_examples() {
        assert!(path(3, 2, "VHVHH").is_rugged());
        assert!(!path(3, 2, "VVHHH").is_rugged());
        assert!(figure2().is_rugged());
        assert!(!figure1().is_rugged());
        // A single-row path is always rugged (n-1 = 0).
        assert!(path(4, 1, "VHHHH").is_rugged());
    }

    #[test]
    fn star_examples() {
        assert_eq!(path(1, 2, "VVH").star(), path(3, 2, "VHVHH"));
        assert_eq!(figure1().star(), figure2());
        assert_eq!(path(1, 1, "VH").star(), path(2, 1, "VHH"));
    }

    #[test]
    fn unstar_examples() {
        assert_eq!(path(3, 2, "VHVHH").unstar().unwrap(), path(1, 2, "VVH"));
        assert_eq!(figure2().unstar().unwrap(), figure1());
        assert_eq!(path(2, 1, "VHH").unstar().unwrap(), path(1, 1, "VH"));
    }

    #[test]
    fn unstar_errors() {
        // Not a star image: VV is not followed by H at index 0.
        assert!(matches!(
            path(3, 2, "VVHHH").unstar(),
            Err(Error::NotStarImage { index: 0 })
        ));
        // Rugged but shape cannot shrink: (1,1) would go to (0,1).
        assert!(matches!(
            path(1, 1, "VH").unstar(),
            Err(Error::UnstarShape { .. })
        ));
    }

    #[test]
    fn enumerate_rugged_examples() {
        assert_eq!(strings(enumerate_rugged(shape(3, 2))), vec!["VHVHH"]);
        assert!(strings(enumerate_rugged(shape(2, 3))).is_empty());
        assert_eq!(enumerate_rugged(shape(5, 2)).count(), 2);
    }

    #[test]
    fn pruned_rugged_enumeration_matches_filter() {
        for (m, n) in [(3, 2), (5, 2), (5, 4), (7, 4), (7, 5), (12, 5), (9, 1)] {
            let s = shape(m, n);
            let filtered: Vec<String> = enumerate(s)
                .filter(|p| p.is_rugged())
                .map(|p| p.step_string())
                .collect();
            assert_eq!(strings(enumerate_rugged(s)), filtered, "shape ({m},{n})");
        }
    }

    #[test]
    fn star_index_map_positions() {
        let p = figure1();
        let map = p.star_index_map();
        assert_eq!(map, vec![0, 2, 4, 5, 7, 8, 9, 11, 12]);
    }

    #[test]
    fn path_record_json() {
        let rec = figure1().record(true);
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            r#"{"m":5,"n":4,"steps":"VVHVHHVHH","area":2,"h":4,"p0":[1,3],"V":[{"p":[0,2],"k":1},{"p":[3,4],"k":2}],"rugged":false}"#
        );
        let bare = serde_json::to_string(&figure1().record(false)).unwrap();
        assert_eq!(bare, r#"{"m":5,"n":4,"steps":"VVHVHHVHH"}"#);
    }
}
