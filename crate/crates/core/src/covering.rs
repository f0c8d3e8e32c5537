//! Coverings of rectangular lattice windows by folding curves.
//!
//! A covering is a family of identified curve pieces such that, inside the
//! window, every lattice edge is the support of exactly one segment and the
//! four segments meeting at any interior point form two non-crossing passes.
//! Pieces may (and, for interior points to be valid, must) extend beyond the
//! window; only the window is validated.

use crate::curve::{self, Curve, CurveError, Point, Vec2};
use crate::seq::{self, FoldWord, Sign};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

/// Errors raised by covering operations.
#[derive(Debug, Error)]
pub enum CoveringError {
    /// The covering violates one of the covering conditions.
    #[error("invalid covering: {0}")]
    Invalid(String),
    /// A curve operation failed.
    #[error(transparent)]
    Curve(#[from] CurveError),
    /// The completion search exhausted its node budget.
    #[error("search exhausted after {0} nodes")]
    Exhausted(u64),
    /// Malformed serialized covering.
    #[error("invalid covering encoding: {0}")]
    BadEncoding(String),
}

/// An inclusive rectangular window `[x0, y0, x1, y1]`.
pub type Window = (i64, i64, i64, i64);

/// Whether a point lies in a window.
pub fn in_window(p: Point, w: Window) -> bool {
    p.0 >= w.0 && p.1 >= w.1 && p.0 <= w.2 && p.1 <= w.3
}

/// One identified curve piece of a covering.
#[derive(Debug, Clone)]
pub struct CoveringCurve {
    /// Stable identifier, unique within the covering.
    pub id: String,
    /// The piece geometry; a finite central subcurve of a complete curve.
    pub curve: Curve,
}

/// A covering of a window by curve pieces.
#[derive(Debug, Clone)]
pub struct Covering {
    /// The validated window.
    pub window: Window,
    /// The curve pieces.
    pub curves: Vec<CoveringCurve>,
}

/// The two edge directions of the lattice level `scale`.
pub fn edge_steps(scale: u32) -> [Vec2; 2] {
    let k = 1i64 << (scale / 2);
    if scale % 2 == 0 {
        [(k, 0), (0, k)]
    } else {
        [(k, k), (k, -k)]
    }
}

/// Whether `p - anchor` lies in the vertex lattice of level `scale`.
pub fn on_lattice(p: Point, anchor: Point, scale: u32) -> bool {
    let (dx, dy) = (p.0 - anchor.0, p.1 - anchor.1);
    let k = scale / 2;
    let m = 1i64 << k;
    if dx.rem_euclid(m) != 0 || dy.rem_euclid(m) != 0 {
        return false;
    }
    scale % 2 == 0 || ((dx >> k) + (dy >> k)).rem_euclid(2) == 0
}

/// Outcome of [`validate`].
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    /// True when all three condition lists are empty.
    pub valid: bool,
    /// Lattice edges of the window not covered, or covered more than once.
    pub condition1: Vec<String>,
    /// Interior points whose incident segments do not form two passes.
    pub condition2: Vec<String>,
    /// Pieces whose turn word is not a factor of a folding sequence.
    pub folding: Vec<String>,
    /// Number of curve pieces.
    pub curve_count: usize,
}

impl Covering {
    /// Common lattice level of all pieces.
    pub fn scale(&self) -> u32 {
        self.curves[0].curve.scale()
    }

    /// Checks the covering conditions on the window:
    /// 1. every lattice edge with both endpoints in the window is the
    ///    support of exactly one segment;
    /// 2. every lattice point interior to the window (all four incident
    ///    edges inside) is crossed by exactly two turning passes, and no
    ///    piece ends there;
    /// 3. every piece's turn word is a factor of a folding sequence.
    pub fn validate(&self) -> ValidationReport {
        let mut condition1 = Vec::new();
        let mut condition2 = Vec::new();
        let mut folding = Vec::new();
        let scale = self.scale();
        let anchor = self.curves[0].curve.start;
        let steps = edge_steps(scale);

        let mut support_count: HashMap<(Point, Vec2), u32> = HashMap::new();
        let mut visits: HashMap<Point, u32> = HashMap::new();
        let mut piece_ends: HashSet<Point> = HashSet::new();
        for cc in &self.curves {
            if cc.curve.scale() != scale {
                condition1.push(format!("piece {} is on a different lattice level", cc.id));
                continue;
            }
            let verts = cc.curve.vertices();
            for (a, b) in cc.curve.segments() {
                *support_count.entry(curve::norm_edge(a, b)).or_insert(0) += 1;
            }
            for &v in &verts[1..verts.len() - 1] {
                *visits.entry(v).or_insert(0) += 1;
            }
            piece_ends.insert(verts[0]);
            piece_ends.insert(*verts.last().unwrap());
            if !seq::is_finite_folding(&cc.curve.turns) {
                folding.push(cc.id.clone());
            }
        }

        let (x0, y0, x1, y1) = self.window;
        let m = 1i64 << (scale / 2);
        for x in (x0..=x1).step_by(m as usize) {
            for y in (y0..=y1).step_by(m as usize) {
                let p = (x, y);
                if !on_lattice(p, anchor, scale) {
                    continue;
                }
                let mut incident_inside = 0;
                for &d in &steps {
                    for q in [(p.0 + d.0, p.1 + d.1), (p.0 - d.0, p.1 - d.1)] {
                        if in_window(q, self.window) {
                            incident_inside += 1;
                            let e = curve::norm_edge(p, q);
                            // Count each edge once, from its base endpoint.
                            if e.0 == p {
                                match support_count.get(&e).copied().unwrap_or(0) {
                                    1 => {}
                                    0 => condition1
                                        .push(format!("edge {:?}+{:?} uncovered", e.0, e.1)),
                                    n => condition1.push(format!(
                                        "edge {:?}+{:?} covered {} times",
                                        e.0, e.1, n
                                    )),
                                }
                            }
                        }
                    }
                }
                if incident_inside == 4 {
                    let passes = visits.get(&p).copied().unwrap_or(0);
                    if passes != 2 {
                        condition2.push(format!("point {p:?} has {passes} passes"));
                    }
                    if piece_ends.contains(&p) {
                        condition2.push(format!("piece ends at interior point {p:?}"));
                    }
                }
            }
        }
        ValidationReport {
            valid: condition1.is_empty() && condition2.is_empty() && folding.is_empty(),
            condition1,
            condition2,
            folding,
            curve_count: self.curves.len(),
        }
    }

    /// Turn signs at all points where some piece turns.
    ///
    /// In a valid covering the two passes through a point always turn the
    /// same way; disagreements are reported as an error.
    pub fn sigma_field(&self) -> Result<HashMap<Point, Sign>, CoveringError> {
        let mut sigma = HashMap::new();
        for cc in &self.curves {
            let verts = cc.curve.vertices();
            for (i, &t) in cc.curve.turns.iter().enumerate() {
                let p = verts[i + 1];
                if let Some(&prev) = sigma.get(&p) {
                    if prev != t {
                        return Err(CoveringError::Invalid(format!(
                            "passes disagree on the turn at {p:?}"
                        )));
                    }
                } else {
                    sigma.insert(p, t);
                }
            }
        }
        Ok(sigma)
    }

    /// Derivative covering: every piece is derived (pairs of segments merged
    /// one lattice level up) on a common parity, and the window is shrunk so
    /// that pair truncation at piece ends cannot leave boundary edges
    /// uncovered. Curve identities are preserved.
    pub fn derive(&self) -> Result<Covering, CoveringError> {
        // The merged vertices of all pieces must land on one sublattice, and
        // only one of the two candidate classes is the pieces' common E_1.
        // Try both, anchored at the first piece's first two vertices, and
        // keep the class that yields a valid derived covering.
        let mut fallback: Option<Covering> = None;
        let mut last_err: Option<CoveringError> = None;
        for class_phase in 0..2usize {
            let anchor = match self.curves.first() {
                Some(cc) if cc.curve.segment_count() >= 1 => {
                    Some(cc.curve.vertices()[class_phase])
                }
                _ => None,
            };
            match self.derive_on(anchor) {
                Ok(cov) => {
                    if cov.validate().valid {
                        return Ok(cov);
                    }
                    if fallback.is_none() {
                        fallback = Some(cov);
                    }
                }
                Err(e) => last_err = Some(e),
            }
        }
        match (fallback, last_err) {
            (Some(cov), _) => Ok(cov),
            (None, Some(e)) => Err(e),
            (None, None) => self.derive_on(None),
        }
    }

    fn derive_on(&self, anchor: Option<Point>) -> Result<Covering, CoveringError> {
        let mut class_anchor: Option<Point> = anchor;
        let mut curves = Vec::with_capacity(self.curves.len());
        let new_scale = self.scale() + 1;
        for cc in &self.curves {
            let c = &cc.curve;
            let verts = c.vertices();
            let mut derived = None;
            for phase in 0..2usize {
                let avail = c.segment_count() - phase;
                let len = avail - avail % 2;
                if len < 2 {
                    continue;
                }
                let sub = c.subcurve(phase, len);
                let cand = match sub.derivative() {
                    Ok(d) => d,
                    Err(_) => continue,
                };
                let ok_class = match class_anchor {
                    None => true,
                    Some(a) => on_lattice(verts[phase], a, new_scale),
                };
                if ok_class {
                    derived = Some((phase, cand));
                    break;
                }
            }
            let Some((phase, d)) = derived else {
                return Err(CoveringError::Curve(CurveError::NotDerivable(
                    "piece has no admissible pairing",
                )));
            };
            if class_anchor.is_none() {
                class_anchor = Some(verts[phase]);
            }
            curves.push(CoveringCurve {
                id: cc.id.clone(),
                curve: d,
            });
        }
        let margin = 2 * (1i64 << new_scale.div_ceil(2));
        let (x0, y0, x1, y1) = self.window;
        Ok(Covering {
            window: (x0 + margin, y0 + margin, x1 - margin, y1 - margin),
            curves,
        })
    }
}

/// Outcome of [`li_patch_check`].
#[derive(Debug, Clone, Serialize)]
pub struct LiReport {
    /// Overall verdict: the covering is locally isomorphic to itself
    /// everywhere (every local patch recurs in every large enough window)
    /// and its pieces are pairwise compatible.
    pub verdict: bool,
    /// Smallest tested window size in which every patch recurs, if any.
    pub recurrence_window: Option<i64>,
    /// Whether all pieces have the same type.
    pub uniform_type: bool,
    /// Whether the covering derives twice on common parities.
    pub aligned_levels: bool,
    /// Piece ids grouped by their order-4 factor fingerprint.
    pub fingerprint_classes: Vec<Vec<String>>,
}

/// A translation-canonicalized bounded set of oriented edges, the
/// comparison unit for local isomorphism of coverings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Patch {
    /// Oriented edges `(base, displacement)`, translated so the minimum
    /// corner of the bounding box of their endpoints is the origin.
    pub edges: BTreeSet<(Point, Vec2)>,
}

/// Extracts the canonicalized patch of a covering over a box: all oriented
/// segments of its curves whose endpoints both lie in the box, translated
/// to the origin corner. Boxes with translated-identical content yield
/// equal patches, and re-canonicalizing is idempotent.
pub fn extract_patch(cov: &Covering, b: Window) -> Patch {
    let mut edges: BTreeSet<(Point, Vec2)> = BTreeSet::new();
    for cc in &cov.curves {
        for (a, q) in cc.curve.segments() {
            if in_window(a, b) && in_window(q, b) {
                edges.insert((a, (q.0 - a.0, q.1 - a.1)));
            }
        }
    }
    let min_x = edges
        .iter()
        .flat_map(|&((x, _), (dx, _))| [x, x + dx])
        .min()
        .unwrap_or(0);
    let min_y = edges
        .iter()
        .flat_map(|&((_, y), (_, dy))| [y, y + dy])
        .min()
        .unwrap_or(0);
    Patch {
        edges: edges
            .into_iter()
            .map(|((x, y), d)| ((x - min_x, y - min_y), d))
            .collect(),
    }
}

/// Fingerprint of a turn word: the set of folding words of order 4
/// occurring in it as factors.
pub fn order4_fingerprint(w: &[Sign]) -> Vec<FoldWord> {
    let mut set: HashSet<FoldWord> = HashSet::new();
    if w.len() >= 15 {
        for f in w.windows(15) {
            if seq::is_n_folding(f) {
                set.insert(f.to_vec());
            }
        }
    }
    let mut v: Vec<FoldWord> = set.into_iter().collect();
    v.sort();
    v
}

/// Local-isomorphism check for a covering.
///
/// The local data at a point is the turn field; a `k`-patch is the matrix of
/// turn signs over the points of a `k x k` box. The check searches, by
/// doubling, for a window size `l` such that every `k`-patch of the covering
/// occurs in every `l x l` window, and additionally requires uniform piece
/// type, two common derivation levels, and pairwise-intersecting order-4
/// factor fingerprints. Pieces of non-isomorphic sequences fail the
/// fingerprint or patch test; if the passes of the covering disagree on
/// some turn, no consistent turn field exists and the patch test fails
/// outright.
pub fn li_patch_check(cov: &Covering, k: i64) -> LiReport {
    let recurrence_window = cov.sigma_field().ok().and_then(|sigma| {
        let (x0, y0, x1, y1) = cov.window;
        // Patches only over fully-interior boxes so sigma is total on them.
        let (ix0, iy0, ix1, iy1) = (x0 + 1, y0 + 1, x1 - 1, y1 - 1);
        let patch_at = |bx: i64, by: i64| -> Option<Vec<Sign>> {
            let mut m = Vec::with_capacity(((k + 1) * (k + 1)) as usize);
            for dx in 0..=k {
                for dy in 0..=k {
                    m.push(*sigma.get(&(bx + dx, by + dy))?);
                }
            }
            Some(m)
        };
        let mut anchors: Vec<(i64, i64, Vec<Sign>)> = Vec::new();
        for bx in ix0..=(ix1 - k) {
            for by in iy0..=(iy1 - k) {
                if let Some(p) = patch_at(bx, by) {
                    anchors.push((bx, by, p));
                }
            }
        }
        let patch_set: HashSet<&Vec<Sign>> = anchors.iter().map(|(_, _, p)| p).collect();
        let mut l = 2 * k;
        let max_l = (ix1 - ix0).min(iy1 - iy0);
        while l <= max_l {
            let mut all_ok = true;
            'outer: for wx in ix0..=(ix1 - l) {
                for wy in iy0..=(iy1 - l) {
                    let inside: HashSet<&Vec<Sign>> = anchors
                        .iter()
                        .filter(|(bx, by, _)| {
                            *bx >= wx && *by >= wy && bx + k <= wx + l && by + k <= wy + l
                        })
                        .map(|(_, _, p)| p)
                        .collect();
                    if !patch_set.is_subset(&inside) {
                        all_ok = false;
                        break 'outer;
                    }
                }
            }
            if all_ok {
                return Some(l);
            }
            l *= 2;
        }
        None
    });

    let types: Vec<_> = cov
        .curves
        .iter()
        .map(|cc| curve::curve_type(&cc.curve))
        .collect();
    let uniform_type = types.iter().all(|t| t.is_ok() && *t == types[0]);
    let aligned_levels = cov.derive().and_then(|d| d.derive()).is_ok();

    let mut classes: Vec<(Vec<FoldWord>, Vec<String>)> = Vec::new();
    for cc in &cov.curves {
        let fp = order4_fingerprint(&cc.curve.turns);
        match classes
            .iter_mut()
            .find(|(f, _)| !f.is_empty() && !fp.is_empty() && f.iter().any(|w| fp.contains(w)))
        {
            Some((_, ids)) => ids.push(cc.id.clone()),
            None => classes.push((fp, ids(cc))),
        }
    }
    fn ids(cc: &CoveringCurve) -> Vec<String> {
        vec![cc.id.clone()]
    }
    let single_class = classes.len() <= 1;
    LiReport {
        verdict: recurrence_window.is_some() && uniform_type && aligned_levels && single_class,
        recurrence_window,
        uniform_type,
        aligned_levels,
        fingerprint_classes: classes.into_iter().map(|(_, ids)| ids).collect(),
    }
}

/// Completes a seed curve into a covering of a window by assigning a turn
/// sign to every lattice point and tracing the resulting passes.
///
/// Edge orientations are fixed by the seed's orientation law, so the only
/// freedom is the turn field; the search backtracks over unassigned points
/// in a deterministic order (`+1` tried first), pruning whenever some
/// maximal traced run has a non-folding turn word. `budget` bounds the
/// number of assignments explored.
pub fn extend_to_covering(
    seed: &Curve,
    window: Window,
    budget: u64,
) -> Result<Covering, CoveringError> {
    if seed.scale() != 0 {
        return Err(CoveringError::Curve(CurveError::NotUnitLattice));
    }
    let eps = seed.rho_epsilon()?;
    let (x0, y0, x1, y1) = window;
    let points: Vec<Point> = (x0..=x1)
        .flat_map(|x| (y0..=y1).map(move |y| (x, y)))
        .collect();
    let mut sigma: HashMap<Point, Sign> = HashMap::new();
    let verts = seed.vertices();
    for (i, &t) in seed.turns.iter().enumerate() {
        sigma.insert(verts[i + 1], t);
    }
    // Deterministic search order: spiral outwards from the seed's centre.
    let cx = verts.iter().map(|p| p.0).sum::<i64>() / verts.len() as i64;
    let cy = verts.iter().map(|p| p.1).sum::<i64>() / verts.len() as i64;
    let mut order: Vec<Point> = points
        .iter()
        .copied()
        .filter(|p| !sigma.contains_key(p))
        .collect();
    order.sort_by_key(|&(x, y)| ((x - cx).abs().max((y - cy).abs()), x, y));

    // Successor of a directed edge under a turn field: rotate and step.
    let follow = |sigma: &HashMap<Point, Sign>, p: Point, d: Vec2| -> Option<(Point, Vec2)> {
        let q = (p.0 + d.0, p.1 + d.1);
        if !in_window(q, window) {
            return None;
        }
        let t = *sigma.get(&q)?;
        Some((q, curve::rot_quarter(d, t)))
    };
    // Collect the maximal run through the directed edge (p -> p + d), as a
    // turn word, walking backwards then forwards while sigma is assigned.
    let max_steps = (4 * (x1 - x0 + 1) * (y1 - y0 + 1)) as usize + 4;
    let run_word = |sigma: &HashMap<Point, Sign>, p0: Point, d0: Vec2| -> Option<FoldWord> {
        let mut word = Vec::new();
        // Walk backwards: predecessor of (p, d) is (p - d', d') where
        // rotating d' by sigma(p) gives d.
        let (mut p, mut d) = (p0, d0);
        loop {
            let Some(&t) = sigma.get(&p) else { break };
            let dprev = curve::rot_quarter(d, -t);
            let q = (p.0 - dprev.0, p.1 - dprev.1);
            if !in_window(q, window) {
                break;
            }
            word.push(t);
            (p, d) = (q, dprev);
            if word.len() > max_steps {
                return None; // closed loop: not a folding run
            }
        }
        word.reverse();
        let (mut p, mut d) = (p0, d0);
        while let Some((q, dn)) = follow(sigma, p, d) {
            word.push(*sigma.get(&q).unwrap());
            (p, d) = (q, dn);
            if word.len() > 2 * max_steps {
                return None;
            }
        }
        Some(word)
    };

    struct Search<'a> {
        order: &'a [Point],
        window: Window,
        eps: u8,
        nodes: u64,
        budget: u64,
    }
    impl Search<'_> {
        fn solve(
            &mut self,
            idx: usize,
            sigma: &mut HashMap<Point, Sign>,
            run_word: &dyn Fn(&HashMap<Point, Sign>, Point, Vec2) -> Option<FoldWord>,
        ) -> Result<bool, CoveringError> {
            if idx == self.order.len() {
                return Ok(true);
            }
            let p = self.order[idx];
            for t in [1i8, -1] {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Err(CoveringError::Exhausted(self.nodes));
                }
                sigma.insert(p, t);
                // Prune: the two runs through p must both still embed in a
                // folding sequence. Incoming directions at p are those whose
                // edge is oriented towards p.
                let mut ok = true;
                for d in [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)] {
                    let src = (p.0 - d.0, p.1 - d.1);
                    if !in_window(src, self.window) {
                        continue;
                    }
                    let (base, nd) = curve::norm_edge(src, p);
                    let fwd = (base, (base.0 + nd.0, base.1 + nd.1)) == (src, p);
                    let rho = curve::rho_value(self.eps, base, nd);
                    let incoming = (rho > 0) == fwd;
                    if !incoming {
                        continue;
                    }
                    match run_word(sigma, src, d) {
                        Some(w) if seq::is_finite_folding(&w) => {}
                        _ => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok && self.solve(idx + 1, sigma, run_word)? {
                    return Ok(true);
                }
                sigma.remove(&p);
            }
            Ok(false)
        }
    }
    let mut search = Search {
        order: &order,
        window,
        eps,
        nodes: 0,
        budget,
    };
    if !search.solve(0, &mut sigma, &run_word)? {
        return Err(CoveringError::Invalid(
            "no folding completion of the seed exists in this window".into(),
        ));
    }

    // Trace all runs and assemble pieces. Runs start on directed edges
    // entering from outside the window or from boundary points.
    let mut curves: Vec<CoveringCurve> = Vec::new();
    let mut used: HashSet<(Point, Vec2)> = HashSet::new();
    let mut starts: Vec<(Point, Vec2)> = Vec::new();
    for &p in &points {
        for d in [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)] {
            let q = (p.0 + d.0, p.1 + d.1);
            if !in_window(q, window) {
                continue;
            }
            let (base, nd) = curve::norm_edge(p, q);
            let fwd = (base, (base.0 + nd.0, base.1 + nd.1)) == (p, q);
            let rho = curve::rho_value(eps, base, nd);
            if (rho > 0) != fwd {
                continue;
            }
            // Directed edge p -> q; it starts a run if its predecessor edge
            // would leave the window.
            let tp = sigma.get(&p);
            let from_boundary = match tp {
                None => true,
                Some(&t) => {
                    let dprev = curve::rot_quarter(d, -t);
                    !in_window((p.0 - dprev.0, p.1 - dprev.1), window)
                }
            };
            if from_boundary {
                starts.push((p, d));
            }
        }
    }
    starts.sort();
    for (p0, d0) in starts {
        if used.contains(&(p0, d0)) {
            continue;
        }
        let mut ds = vec![d0];
        let (mut p, mut d) = (p0, d0);
        used.insert((p, d));
        while let Some((q, dn)) = follow(&sigma, p, d) {
            if !in_window((q.0 + dn.0, q.1 + dn.1), window) || ds.len() > max_steps {
                break;
            }
            ds.push(dn);
            (p, d) = (q, dn);
            used.insert((p, d));
        }
        let c = Curve::from_displacements(p0, &ds);
        let id = format!("run{}", curves.len());
        curves.push(CoveringCurve { id, curve: c });
    }
    Ok(Covering { window, curves })
}

/// Serialized form of a covering.
#[derive(Debug, Serialize, Deserialize)]
pub struct CoveringFile {
    /// Window `[x0, y0, x1, y1]`.
    pub window: [i64; 4],
    /// The curve pieces.
    pub curves: Vec<CoveringCurveFile>,
    /// Pass pairing at each point crossed twice: the point, then the two
    /// `(incoming, outgoing)` pairs of global segment indices (pieces
    /// flattened in order). Redundant with the pieces; kept explicit
    /// because the connection choice at a limit point is a free parameter.
    #[serde(default)]
    pub pairings: Vec<((i64, i64), (usize, usize), (usize, usize))>,
}

/// One serialized covering piece.
#[derive(Debug, Serialize, Deserialize)]
pub struct CoveringCurveFile {
    /// Piece identifier.
    pub id: String,
    /// Initial point.
    pub start: [i64; 2],
    /// First-segment direction (see the curve format).
    pub dir: serde_json::Value,
    /// Turn word.
    pub turns: String,
}

impl Covering {
    /// Serializes to the covering JSON format, computing the pairings.
    pub fn to_file(&self) -> CoveringFile {
        let mut seg_at: HashMap<Point, Vec<(usize, usize)>> = HashMap::new();
        let mut offset = 0usize;
        for cc in &self.curves {
            let verts = cc.curve.vertices();
            for i in 1..verts.len() - 1 {
                // Pass through verts[i]: segments offset+i-1 -> offset+i.
                seg_at
                    .entry(verts[i])
                    .or_default()
                    .push((offset + i - 1, offset + i));
            }
            offset += cc.curve.segment_count();
        }
        let mut pairings: Vec<((i64, i64), (usize, usize), (usize, usize))> = seg_at
            .into_iter()
            .filter(|(p, v)| v.len() == 2 && in_window(*p, self.window))
            .map(|(p, v)| (p, v[0], v[1]))
            .collect();
        pairings.sort();
        CoveringFile {
            window: [self.window.0, self.window.1, self.window.2, self.window.3],
            curves: self
                .curves
                .iter()
                .map(|cc| {
                    let f = cc.curve.to_file();
                    CoveringCurveFile {
                        id: cc.id.clone(),
                        start: f.start,
                        dir: f.dir,
                        turns: f.turns,
                    }
                })
                .collect(),
            pairings,
        }
    }

    /// Deserializes from the covering JSON format.
    pub fn from_file(f: &CoveringFile) -> Result<Self, CoveringError> {
        let curves = f
            .curves
            .iter()
            .map(|cf| {
                let dir = curve::parse_dir(&cf.dir)
                    .map_err(|e| CoveringError::BadEncoding(e.to_string()))?;
                let turns = seq::parse_word(&cf.turns)
                    .map_err(|e| CoveringError::BadEncoding(e.to_string()))?;
                Ok(CoveringCurve {
                    id: cf.id.clone(),
                    curve: Curve::new((cf.start[0], cf.start[1]), dir, turns),
                })
            })
            .collect::<Result<Vec<_>, CoveringError>>()?;
        Ok(Covering {
            window: (f.window[0], f.window[1], f.window[2], f.window[3]),
            curves,
        })
    }
}
