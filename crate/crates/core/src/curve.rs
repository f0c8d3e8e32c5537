//! Lattice curves encoded by turn words, and their derivation calculus.
//!
//! A curve is a polyline on the square lattice (or on one of its diagonal
//! refinement levels): a start point, a first-segment displacement, and a
//! word of `+1` (left) / `-1` (right) quarter-turns. The *derivative* merges
//! consecutive segment pairs into single segments one lattice level up; the
//! two *antiderivatives* split every segment in two, bulging alternately
//! left and right. Folding curves are the iterated antiderivatives of a
//! single segment; their turn words are exactly the folding words.

use crate::seq::{self, FoldWord, Sign};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

/// A lattice point.
pub type Point = (i64, i64);

/// A displacement vector.
pub type Vec2 = (i64, i64);

/// Errors raised by curve operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    /// The segment pairing required by derivation does not exist.
    #[error("curve is not derivable: {0}")]
    NotDerivable(&'static str),
    /// Both segment pairings are consistent, so the derivative is not unique.
    #[error("derivative is ambiguous: both pairings alternate")]
    Ambiguous,
    /// The operation needs a unit-lattice curve.
    #[error("operation requires a unit-lattice curve")]
    NotUnitLattice,
    /// The operation needs a folding curve.
    #[error("turn word is not a folding word")]
    NotFolding,
    /// Malformed serialized curve.
    #[error("invalid curve encoding: {0}")]
    BadEncoding(String),
}

/// Rotates a vector a quarter turn left (`+1`) or right (`-1`).
pub fn rot_quarter(d: Vec2, turn: Sign) -> Vec2 {
    if turn > 0 {
        (-d.1, d.0)
    } else {
        (d.1, -d.0)
    }
}

/// The turn sign from `d1` to `d2`, which must be perpendicular.
pub fn turn_between(d1: Vec2, d2: Vec2) -> Sign {
    let cross = d1.0 * d2.1 - d1.1 * d2.0;
    debug_assert!(cross != 0, "consecutive segments must turn");
    if cross > 0 {
        1
    } else {
        -1
    }
}

/// Normalizes an edge to (base, direction) with a canonical direction.
pub fn norm_edge(a: Point, b: Point) -> (Point, Vec2) {
    let d = (b.0 - a.0, b.1 - a.1);
    if d.0 < 0 || (d.0 == 0 && d.1 < 0) {
        (b, (-d.0, -d.1))
    } else {
        (a, d)
    }
}

/// An open polyline with unit-speed quarter-turn segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    /// Initial point of the first segment.
    pub start: Point,
    /// Displacement of the first segment; its squared length is `2^scale`.
    pub dir: Vec2,
    /// `turns[i]` is the turn between segments `i` and `i + 1`.
    pub turns: FoldWord,
}

impl Curve {
    /// Builds a curve from a start point, first displacement, and turn word.
    pub fn new(start: Point, dir: Vec2, turns: FoldWord) -> Self {
        Curve { start, dir, turns }
    }

    /// The folding curve of order `dirs.len()` with fold directions `dirs`,
    /// starting at `start` with first displacement `dir`.
    pub fn folding(start: Point, dir: Vec2, dirs: &[Sign]) -> Self {
        Curve::new(start, dir, seq::gen_n_folding(dirs))
    }

    /// Number of segments.
    pub fn segment_count(&self) -> usize {
        self.turns.len() + 1
    }

    /// Lattice level: `|dir|^2 = 2^scale` (0 = unit, 1 = diagonal, ...).
    pub fn scale(&self) -> u32 {
        let n2 = self.dir.0 * self.dir.0 + self.dir.1 * self.dir.1;
        debug_assert!(n2 > 0 && (n2 as u64).is_power_of_two());
        (n2 as u64).trailing_zeros()
    }

    /// Displacement vectors of all segments.
    pub fn displacements(&self) -> Vec<Vec2> {
        let mut out = Vec::with_capacity(self.segment_count());
        let mut d = self.dir;
        out.push(d);
        for &t in &self.turns {
            d = rot_quarter(d, t);
            out.push(d);
        }
        out
    }

    /// All `segment_count() + 1` vertices in order.
    pub fn vertices(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.segment_count() + 1);
        let mut p = self.start;
        out.push(p);
        for d in self.displacements() {
            p = (p.0 + d.0, p.1 + d.1);
            out.push(p);
        }
        out
    }

    /// Oriented segments as (initial, terminal) pairs.
    pub fn segments(&self) -> Vec<(Point, Point)> {
        let v = self.vertices();
        v.windows(2).map(|w| (w[0], w[1])).collect()
    }

    /// The set of normalized segment supports.
    pub fn support_set(&self) -> HashSet<(Point, Vec2)> {
        self.segments()
            .iter()
            .map(|&(a, b)| norm_edge(a, b))
            .collect()
    }

    /// The set of visited lattice points.
    pub fn vertex_set(&self) -> HashSet<Point> {
        self.vertices().into_iter().collect()
    }

    /// Rebuilds a curve from an explicit displacement list.
    pub fn from_displacements(start: Point, ds: &[Vec2]) -> Self {
        assert!(!ds.is_empty());
        let turns = ds.windows(2).map(|w| turn_between(w[0], w[1])).collect();
        Curve::new(start, ds[0], turns)
    }

    /// A contiguous subcurve of `len` segments starting at segment `from`.
    pub fn subcurve(&self, from: usize, len: usize) -> Curve {
        assert!(len >= 1 && from + len <= self.segment_count());
        let v = self.vertices();
        let ds = self.displacements();
        Curve::from_displacements(v[from], &ds[from..from + len])
    }

    /// Doubles all coordinates (a homothety of ratio 2 about the origin),
    /// which raises the lattice level by two.
    pub fn doubled(&self) -> Curve {
        Curve::new(
            (self.start.0 * 2, self.start.1 * 2),
            (self.dir.0 * 2, self.dir.1 * 2),
            self.turns.clone(),
        )
    }

    /// Whether the curve, drawn with inset hooks around its vertices, has no
    /// self-intersection: all segment supports are distinct and no lattice
    /// point carries more than two passes. Two quarter-turn passes through a
    /// point occupy opposite corner quadrants, so they never cross.
    pub fn is_self_avoiding(&self) -> bool {
        let mut supports = HashSet::new();
        for (a, b) in self.segments() {
            if !supports.insert(norm_edge(a, b)) {
                return false;
            }
        }
        let mut visits: HashMap<Point, u8> = HashMap::new();
        for p in self.vertices() {
            let v = visits.entry(p).or_insert(0);
            *v += 1;
            if *v > 2 {
                return false;
            }
        }
        true
    }

    /// Whether the pairing starting at segment `parity` (0 or 1) satisfies
    /// the alternation law: the turns inside consecutive pairs alternate.
    /// Only a pairing that consumes all segments is admitted, so `parity`
    /// must match the segment count's parity (`parity == count % 2` fails).
    fn pairing_alternates(&self, parity: usize) -> bool {
        let n = self.segment_count();
        if parity != 0 || n % 2 != 0 {
            // A shifted pairing never consumes a finite curve completely.
            return false;
        }
        let intra: Vec<Sign> = self.turns.iter().step_by(2).copied().collect();
        intra
            .iter()
            .enumerate()
            .all(|(i, &t)| t == if i % 2 == 0 { intra[0] } else { -intra[0] })
    }

    /// The derivative: merges segment pairs `(C_{2i-1}, C_{2i})` into single
    /// segments one lattice level up. Requires an even segment count and the
    /// alternation law on the intra-pair turns.
    pub fn derivative(&self) -> Result<Curve, CurveError> {
        let n = self.segment_count();
        if n < 2 || n % 2 != 0 {
            return Err(CurveError::NotDerivable("segment count must be even"));
        }
        if !self.pairing_alternates(0) {
            return Err(CurveError::NotDerivable(
                "intra-pair turns do not alternate",
            ));
        }
        let ds = self.displacements();
        let merged: Vec<Vec2> = ds
            .chunks(2)
            .map(|p| (p[0].0 + p[1].0, p[0].1 + p[1].1))
            .collect();
        if merged.len() == 1 {
            return Ok(Curve::new(self.start, merged[0], Vec::new()));
        }
        Ok(Curve::from_displacements(self.start, &merged))
    }

    /// The two antiderivatives, one lattice level down: every segment is
    /// split in two, pairs bulging alternately to the left and right of the
    /// original segments. Index 0 of the result has its first pair bulging
    /// left. A unit-lattice curve is doubled first so that the result stays
    /// on integer coordinates; curves at level `>= 1` are antiderived in
    /// place and satisfy `antiderivatives()[k].derivative() == self`.
    pub fn antiderivatives(&self) -> [Curve; 2] {
        let base = if self.scale() == 0 {
            self.doubled()
        } else {
            self.clone()
        };
        let ds = base.displacements();
        let build = |side0: Sign| -> Curve {
            let mut out = Vec::with_capacity(ds.len() * 2);
            for (i, &(a, b)) in ds.iter().enumerate() {
                let side = if i % 2 == 0 { side0 } else { -side0 };
                // First half-segment: the displacement rotated 45 degrees
                // towards `side` and shrunk by sqrt(2).
                let u = if side > 0 {
                    ((a - b) / 2, (a + b) / 2)
                } else {
                    ((a + b) / 2, (b - a) / 2)
                };
                out.push(u);
                out.push((a - u.0, b - u.1));
            }
            Curve::from_displacements(base.start, &out)
        };
        [build(1), build(-1)]
    }

    /// Iterated derivative.
    pub fn derivative_n(&self, k: u32) -> Result<Curve, CurveError> {
        let mut c = self.clone();
        for _ in 0..k {
            c = c.derivative()?;
        }
        Ok(c)
    }

    /// Maximal Chebyshev distance between two vertices.
    pub fn diameter_delta(&self) -> i64 {
        let v = self.vertices();
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for (x, y) in v {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
        (xmax - xmin).max(ymax - ymin)
    }

    /// Turn sign at a lattice point, if the curve turns there.
    pub fn sigma_sign(&self, p: Point) -> Option<Sign> {
        let v = self.vertices();
        v.iter()
            .position(|&q| q == p)
            .filter(|&i| i >= 1 && i <= self.turns.len())
            .map(|i| self.turns[i - 1])
    }

    /// The orientation parity `epsilon` of a unit-lattice curve: horizontal
    /// edges at base `(x, y)` are traversed eastwards exactly when
    /// `(-1)^(y - x + epsilon) = +1`, vertical edges northwards when
    /// `(-1)^(y - x + epsilon + 1) = +1`.
    pub fn rho_epsilon(&self) -> Result<u8, CurveError> {
        if self.scale() != 0 {
            return Err(CurveError::NotUnitLattice);
        }
        let (a, b) = (self.start, {
            let d = self.dir;
            (self.start.0 + d.0, self.start.1 + d.1)
        });
        let (base, dir) = norm_edge(a, b);
        let forward = (a, b) == (base, (base.0 + dir.0, base.1 + dir.1));
        let rho: Sign = if forward { 1 } else { -1 };
        let vertical = dir.0 == 0;
        let parity = (base.1 - base.0).rem_euclid(2) as u8 ^ u8::from(vertical);
        // rho = (-1)^(parity + epsilon)
        Ok(if rho > 0 { parity } else { parity ^ 1 })
    }

    /// Traversal orientation of the unit edge at normalized `(base, d)`
    /// under this curve's orientation law: `+1` = east/north.
    pub fn rho_sign(&self, base: Point, d: Vec2) -> Result<Sign, CurveError> {
        let eps = self.rho_epsilon()?;
        Ok(rho_value(eps, base, d))
    }
}

/// Orientation of a unit edge for a given global parity `epsilon`.
pub fn rho_value(epsilon: u8, base: Point, d: Vec2) -> Sign {
    let vertical = d.0 == 0;
    let parity = (base.1 - base.0).rem_euclid(2) as u8 ^ u8::from(vertical) ^ epsilon;
    if parity == 0 {
        1
    } else {
        -1
    }
}

/// Axis class of the segments indexed by `E_1`, used as the *type* of a
/// folding curve within a covering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveType {
    /// `E_1` segments horizontal (or on the `(1,1)` diagonal one level up).
    H,
    /// `E_1` segments vertical (or on the `(1,-1)` diagonal).
    V,
}

/// The type of a folding curve: the axis of its `E_1`-indexed segments.
///
/// The alternating turn-index class is `F_0`; its complement `E_1` indexes
/// segments of a single axis. Requires at least 8 segments so that the
/// alternating class is unique.
pub fn curve_type(c: &Curve) -> Result<CurveType, CurveError> {
    let n = c.segment_count();
    if n < 8 {
        return Err(CurveError::NotFolding);
    }
    let class = |phase: usize| -> Vec<Sign> {
        c.turns.iter().skip(phase).step_by(2).copied().collect()
    };
    let alternates = |v: &[Sign]| {
        v.iter()
            .enumerate()
            .all(|(i, &t)| t == if i % 2 == 0 { v[0] } else { -v[0] })
    };
    let a0 = alternates(&class(0));
    let a1 = alternates(&class(1));
    // 1-based turn indices with phase 0 are the odd numbers; if those
    // alternate they form F_0 and the even-indexed segments are E_1.
    let e1_segment = match (a0, a1) {
        (true, false) => 1usize, // 0-based index of segment C_2
        (false, true) => 0usize, // segment C_1 is even-indexed one shift up
        _ => return Err(CurveError::NotFolding),
    };
    let d = c.displacements()[e1_segment];
    let horizontal_like = if c.scale() % 2 == 0 {
        d.1 == 0
    } else {
        d.0 == d.1
    };
    Ok(if horizontal_like {
        CurveType::H
    } else {
        CurveType::V
    })
}

/// Whether every unit edge with both endpoints in the diamond
/// `|x - u| + |y - v| <= radius` is the support of a segment of `c`.
pub fn covers_diamond(c: &Curve, center: Point, radius: i64) -> bool {
    diamond_covered(&c.support_set(), center, radius)
}

fn diamond_covered(supports: &HashSet<(Point, Vec2)>, center: Point, radius: i64) -> bool {
    let (u, v) = center;
    for x in (u - radius)..=(u + radius) {
        for y in (v - radius)..=(v + radius) {
            if (x - u).abs() + (y - v).abs() > radius {
                continue;
            }
            for d in [(1i64, 0i64), (0, 1)] {
                let q = (x + d.0, y + d.1);
                if (q.0 - u).abs() + (q.1 - v).abs() <= radius
                    && !supports.contains(&((x, y), d))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Finds a diamond centre of the given radius fully covered by `c`.
pub fn find_covered_diamond(c: &Curve, radius: i64) -> Option<Point> {
    let supports = c.support_set();
    let verts = c.vertices();
    verts
        .iter()
        .copied()
        .find(|&p| diamond_covered(&supports, p, radius))
}

/// Kind of translated copy found by [`find_parallel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopyKind {
    /// Same displacement vectors.
    Parallel,
    /// Negated displacement vectors.
    Opposite,
}

/// Searches `(C_{j+1}, ..., C_{j+88n})` for a translated copy of
/// `(C_{i+1}, ..., C_{i+n})` of the requested kind; returns the offset.
///
/// Indices are 0-based segment indices: the pattern is segments
/// `i..i+n` and the search range segments `j..j+88n`.
pub fn find_parallel(c: &Curve, i: usize, n: usize, j: usize, kind: CopyKind) -> Option<usize> {
    let ds = c.displacements();
    assert!(i + n <= ds.len(), "pattern out of range");
    let pattern: Vec<Vec2> = match kind {
        CopyKind::Parallel => ds[i..i + n].to_vec(),
        CopyKind::Opposite => ds[i..i + n].iter().map(|&(x, y)| (-x, -y)).collect(),
    };
    let end = (j + 88 * n).min(ds.len());
    if j >= end || end - j < n {
        return None;
    }
    ds[j..end]
        .windows(n)
        .position(|w| w == pattern.as_slice())
}

/// A violation of the square-configuration law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareViolation {
    /// Lower-left corner of the offending unit square.
    pub square: Point,
    /// Number of square corners visited by the curve.
    pub corners: usize,
}

/// Checks the local law for unit squares against a self-avoiding,
/// twice-derivable unit curve `c`:
///
/// * 4 corners visited: at least 3 square edges are supports, two of them
///   of consecutive segments;
/// * 3 corners visited: of the two square edges joining visited corners,
///   both or neither are supports;
/// * 2 corners visited: the visited corners are adjacent, not diagonal.
///
/// Squares with a corner among the first or last two vertices of the curve
/// are skipped: the law is inherited from a two-sided extension and may be
/// truncated at the ends of a finite curve.
pub fn square_config_check(c: &Curve) -> Result<(), SquareViolation> {
    let verts = c.vertices();
    let vcount = verts.len();
    let index: HashMap<Point, usize> = verts
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let mut edge_segments: HashMap<(Point, Vec2), usize> = HashMap::new();
    for (si, (a, b)) in c.segments().into_iter().enumerate() {
        edge_segments.insert(norm_edge(a, b), si);
    }
    let margin = 2usize;
    let interior = |p: Point| -> Option<bool> {
        index
            .get(&p)
            .map(|&i| i >= margin && i + margin < vcount)
    };
    let mut candidates: HashSet<Point> = HashSet::new();
    for &(x, y) in &verts {
        for sq in [(x - 1, y - 1), (x - 1, y), (x, y - 1), (x, y)] {
            candidates.insert(sq);
        }
    }
    for sq in candidates {
        let corners = [
            sq,
            (sq.0 + 1, sq.1),
            (sq.0 + 1, sq.1 + 1),
            (sq.0, sq.1 + 1),
        ];
        let hit: Vec<bool> = corners.iter().map(|p| index.contains_key(p)).collect();
        let hits = hit.iter().filter(|&&b| b).count();
        if hits < 2 {
            continue;
        }
        // Skip squares touching the loose ends of the finite curve.
        if corners
            .iter()
            .any(|&p| interior(p) == Some(false))
        {
            continue;
        }
        let edges: Vec<((Point, Vec2), usize, usize)> = (0..4)
            .map(|k| (norm_edge(corners[k], corners[(k + 1) % 4]), k, (k + 1) % 4))
            .collect();
        let violation = SquareViolation {
            square: sq,
            corners: hits,
        };
        match hits {
            4 => {
                let segs: Vec<usize> = edges
                    .iter()
                    .filter_map(|(e, _, _)| edge_segments.get(e).copied())
                    .collect();
                let consecutive = segs
                    .iter()
                    .any(|&a| segs.iter().any(|&b| a + 1 == b));
                if segs.len() < 3 || !consecutive {
                    return Err(violation);
                }
            }
            3 => {
                let determined: Vec<bool> = edges
                    .iter()
                    .filter(|&&(_, a, b)| hit[a] && hit[b])
                    .map(|(e, _, _)| edge_segments.contains_key(e))
                    .collect();
                debug_assert_eq!(determined.len(), 2);
                if determined[0] != determined[1] {
                    return Err(violation);
                }
            }
            2 => {
                let diagonal = (hit[0] && hit[2] && !hit[1] && !hit[3])
                    || (hit[1] && hit[3] && !hit[0] && !hit[2]);
                if diagonal {
                    return Err(violation);
                }
            }
            _ => unreachable!(),
        }
    }
    Ok(())
}

/// A connected component of unvisited lattice points inside a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExteriorComponent {
    /// Number of lattice points in the component.
    pub size: usize,
    /// Whether the component touches the window boundary (the desk-scale
    /// witness that it is a trace of an infinite exterior component).
    pub touches_boundary: bool,
}

/// Connected components (4-adjacency) of the lattice points of
/// `[x0, x1] x [y0, y1]` not contained in `vertex_set`.
pub fn exterior_components(
    vertex_set: &HashSet<Point>,
    window: (i64, i64, i64, i64),
) -> Vec<ExteriorComponent> {
    let (x0, y0, x1, y1) = window;
    let mut seen: HashSet<Point> = HashSet::new();
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            let p = (x, y);
            if vertex_set.contains(&p) || seen.contains(&p) {
                continue;
            }
            let mut size = 0usize;
            let mut touches = false;
            let mut queue = VecDeque::from([p]);
            seen.insert(p);
            while let Some((qx, qy)) = queue.pop_front() {
                size += 1;
                if qx == x0 || qx == x1 || qy == y0 || qy == y1 {
                    touches = true;
                }
                for (nx, ny) in [(qx + 1, qy), (qx - 1, qy), (qx, qy + 1), (qx, qy - 1)] {
                    let q = (nx, ny);
                    if nx < x0 || nx > x1 || ny < y0 || ny > y1 {
                        continue;
                    }
                    if !vertex_set.contains(&q) && seen.insert(q) {
                        queue.push_back(q);
                    }
                }
            }
            out.push(ExteriorComponent {
                size,
                touches_boundary: touches,
            });
        }
    }
    out
}

/// Serialized form of a curve.
#[derive(Debug, Serialize, Deserialize)]
pub struct CurveFile {
    /// Initial point.
    pub start: [i64; 2],
    /// First-segment direction: `"E" | "N" | "W" | "S"` on the unit lattice,
    /// `"NE" | "NW" | "SW" | "SE"` on the diagonal lattice, or an explicit
    /// `[dx, dy]` vector at higher levels.
    pub dir: serde_json::Value,
    /// Turn word as a `+`/`-` string.
    pub turns: String,
    /// Lattice tag, `"unit"` or `"diag"`; informative, implied by `dir`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<String>,
}

/// Parses a direction token or vector.
pub fn parse_dir(v: &serde_json::Value) -> Result<Vec2, CurveError> {
    if let Some(s) = v.as_str() {
        return match s {
            "E" => Ok((1, 0)),
            "N" => Ok((0, 1)),
            "W" => Ok((-1, 0)),
            "S" => Ok((0, -1)),
            "NE" => Ok((1, 1)),
            "NW" => Ok((-1, 1)),
            "SW" => Ok((-1, -1)),
            "SE" => Ok((1, -1)),
            other => Err(CurveError::BadEncoding(format!("bad direction {other:?}"))),
        };
    }
    if let Some(arr) = v.as_array() {
        if let [Some(x), Some(y)] = [arr.first().and_then(|x| x.as_i64()), arr.get(1).and_then(|y| y.as_i64())] {
            return Ok((x, y));
        }
    }
    Err(CurveError::BadEncoding("bad direction".into()))
}

/// Formats a direction as a token when possible, else as a vector.
pub fn format_dir(d: Vec2) -> serde_json::Value {
    let tok = match d {
        (1, 0) => Some("E"),
        (0, 1) => Some("N"),
        (-1, 0) => Some("W"),
        (0, -1) => Some("S"),
        (1, 1) => Some("NE"),
        (-1, 1) => Some("NW"),
        (-1, -1) => Some("SW"),
        (1, -1) => Some("SE"),
        _ => None,
    };
    match tok {
        Some(t) => serde_json::Value::String(t.into()),
        None => serde_json::json!([d.0, d.1]),
    }
}

impl Curve {
    /// Serializes to the curve JSON format.
    pub fn to_file(&self) -> CurveFile {
        CurveFile {
            start: [self.start.0, self.start.1],
            dir: format_dir(self.dir),
            turns: seq::format_word(&self.turns),
            lattice: Some(if self.scale() % 2 == 0 { "unit" } else { "diag" }.into()),
        }
    }

    /// Deserializes from the curve JSON format.
    pub fn from_file(f: &CurveFile) -> Result<Self, CurveError> {
        let dir = parse_dir(&f.dir)?;
        let turns =
            seq::parse_word(&f.turns).map_err(|e| CurveError::BadEncoding(e.to_string()))?;
        Ok(Curve::new((f.start[0], f.start[1]), dir, turns))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_folding() -> Curve {
        Curve::folding((0, 0), (1, 0), &[1, 1])
    }

    #[test]
    fn derivative_of_order_two_curve() {
        // Turn word (+ + -): derivative has single turn word (+).
        let c = two_folding();
        let d = c.derivative().unwrap();
        assert_eq!(d.turns, vec![1]);
        assert_eq!(d.segment_count(), 2);
        assert_eq!(d.start, c.start);
        assert_eq!(d.vertices().last(), c.vertices().last());
    }

    #[test]
    fn antiderivatives_round_trip() {
        let c = Curve::folding((0, 0), (2, 0), &[1, -1, 1]);
        for a in c.antiderivatives() {
            assert_eq!(a.derivative().unwrap(), c);
            assert!(a.is_self_avoiding());
        }
    }

    #[test]
    fn antiderivatives_of_segment_are_order_one() {
        let seg = Curve::new((0, 0), (2, 0), vec![]);
        let [l, r] = seg.antiderivatives();
        assert_eq!(l.turns, vec![-1]);
        assert_eq!(r.turns, vec![1]);
        assert_eq!(l.vertices()[1], (1, 1));
        assert_eq!(r.vertices()[1], (1, -1));
    }

    #[test]
    fn folding_curves_self_avoid() {
        for n in 1..=8 {
            for w in seq::all_n_folding(n) {
                let c = Curve::new((0, 0), (1, 0), w);
                assert!(c.is_self_avoiding());
            }
        }
    }

    #[test]
    fn type_of_small_folding_curve() {
        let c = Curve::folding((0, 0), (1, 0), &[1, 1, 1]);
        // Phase-0 turns alternate, so segment C_2 decides; it is vertical.
        assert_eq!(curve_type(&c).unwrap(), CurveType::V);
    }

    #[test]
    fn seven_folding_covers_radius_two_diamond() {
        for w in seq::all_n_folding(7) {
            let c = Curve::new((0, 0), (1, 0), w);
            assert!(find_covered_diamond(&c, 2).is_some());
        }
    }

    #[test]
    fn square_configuration_on_small_orders() {
        for n in 2..=8 {
            for w in seq::all_n_folding(n) {
                let c = Curve::new((0, 0), (1, 0), w);
                assert_eq!(square_config_check(&c), Ok(()));
            }
        }
    }

    #[test]
    fn exterior_of_folding_curve_touches_boundary() {
        let c = Curve::folding((0, 0), (1, 0), &[1, 1, 1, 1, 1, 1, 1, 1]);
        let comps = exterior_components(&c.vertex_set(), (-32, -32, 32, 32));
        assert!(comps.iter().all(|k| k.touches_boundary));
    }
}
