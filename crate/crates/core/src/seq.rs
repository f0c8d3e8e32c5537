//! Finite and two-sided infinite paperfolding sequences.
//!
//! A *folding word of order n* is the crease word read along an unfolded
//! strip of paper after `n` halving folds: a word of length `2^n - 1` over
//! the alphabet `{+1, -1}`. Complete (two-sided) folding sequences arise as
//! limits of folding words and are represented here by a [`CompleteSpec`]:
//! one branch/sign choice per level, from which any letter can be evaluated
//! in `O(levels)` time.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

/// A letter of a folding word: `+1` or `-1`.
pub type Sign = i8;

/// A finite word over `{+1, -1}`.
pub type FoldWord = Vec<Sign>;

/// Errors raised by sequence operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    /// The word does not have length `2^n - 1` or fails the folding laws.
    #[error("not a folding word of order {0}")]
    NotFoldingWord(usize),
    /// A letter of a complete sequence could not be determined because the
    /// index lies beyond every chosen level and no limit sign is set.
    #[error("letter at index {0} is undetermined")]
    Undetermined(i64),
    /// A `+`/`-` string contained an unexpected character.
    #[error("invalid sign character {0:?}")]
    BadSignChar(char),
}

/// Parses a `+`/`-` string into a word.
pub fn parse_word(s: &str) -> Result<FoldWord, SeqError> {
    s.trim()
        .chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            other => Err(SeqError::BadSignChar(other)),
        })
        .collect()
}

/// Formats a word as a `+`/`-` string.
pub fn format_word(w: &[Sign]) -> String {
    w.iter().map(|&a| if a > 0 { '+' } else { '-' }).collect()
}

/// Reverse-negate: `bar(a_1 .. a_m) = (-a_m, .., -a_1)`.
///
/// `bar` is an involution, and a word is a folding word of order `n` exactly
/// when its image under `bar` is.
pub fn bar(w: &[Sign]) -> FoldWord {
    w.iter().rev().map(|&a| -a).collect()
}

/// Returns `n` if `len == 2^n - 1`.
pub fn order_for_len(len: usize) -> Option<usize> {
    let m = len + 1;
    m.is_power_of_two().then(|| m.trailing_zeros() as usize)
}

/// Generates the folding word of order `dirs.len()` with fold directions
/// `dirs`: the letter at 1-based index `2^r * (2m + 1)` is `(-1)^m * dirs[r]`.
///
/// Distinct direction vectors give distinct words, so this enumerates all
/// `2^n` folding words of order `n` as `dirs` ranges over `{+1,-1}^n`.
pub fn gen_n_folding(dirs: &[Sign]) -> FoldWord {
    let n = dirs.len();
    let len = (1usize << n) - 1;
    let mut w = vec![0i8; len];
    for (i, slot) in w.iter_mut().enumerate() {
        let p = i + 1;
        let r = p.trailing_zeros() as usize;
        let m = (p >> (r + 1)) & 1; // parity of m in p = 2^r (2m+1)
        *slot = if m == 0 { dirs[r] } else { -dirs[r] };
    }
    w
}

/// Extracts the fold directions of a folding word of order `n`, i.e. the
/// letters at 1-based indices `2^r`. Does not validate the word.
pub fn fold_dirs(w: &[Sign]) -> Vec<Sign> {
    let n = order_for_len(w.len()).expect("length must be 2^n - 1");
    (0..n).map(|r| w[(1usize << r) - 1]).collect()
}

/// Tests whether `w` is a folding word of order `n = log2(len + 1)`.
///
/// Uses the subword law: the odd-indexed letters must alternate starting
/// from the first letter, and the even-indexed subword must itself be a
/// folding word of the next lower order.
pub fn is_n_folding(w: &[Sign]) -> bool {
    if order_for_len(w.len()).is_none() {
        return false;
    }
    let mut cur: Vec<Sign> = w.to_vec();
    while !cur.is_empty() {
        let first = cur[0];
        for (k, chunk) in cur.iter().step_by(2).enumerate() {
            let want = if k % 2 == 0 { first } else { -first };
            if *chunk != want {
                return false;
            }
        }
        cur = cur.iter().skip(1).step_by(2).copied().collect();
    }
    true
}

/// One unfolding step: maps a folding word `w` of order `n` and a centre
/// letter to the folding word `(bar(w), center, w)` of order `n + 1`.
pub fn unfold(w: &[Sign], center: Sign) -> FoldWord {
    let mut out = bar(w);
    out.push(center);
    out.extend_from_slice(w);
    out
}

/// Tests whether `w` occurs as a factor of some folding word (equivalently,
/// of some complete folding sequence).
///
/// A factor of length `>= 2` inherits the alternation law along one of the
/// two index parities; the complementary parity must recursively be a
/// factor one level down. Both phase choices are tried.
pub fn is_finite_folding(w: &[Sign]) -> bool {
    if w.len() <= 1 {
        return true;
    }
    for phase in 0..2usize {
        let alt: Vec<Sign> = w.iter().skip(phase).step_by(2).copied().collect();
        let rest: Vec<Sign> = w.iter().skip(1 - phase).step_by(2).copied().collect();
        let alternates = alt
            .iter()
            .enumerate()
            .all(|(k, &a)| a == if k % 2 == 0 { alt[0] } else { -alt[0] });
        if alternates && is_finite_folding(&rest) {
            return true;
        }
    }
    false
}

/// Iterates over all `2^n` folding words of order `n`.
pub fn all_n_folding(n: usize) -> impl Iterator<Item = FoldWord> {
    (0u64..(1 << n)).map(move |mask| {
        let dirs: Vec<Sign> = (0..n)
            .map(|r| if mask >> r & 1 == 1 { 1 } else { -1 })
            .collect();
        gen_n_folding(&dirs)
    })
}

/// Extension rule for levels beyond the explicit prefix of a
/// [`CompleteSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChoiceRule {
    /// Branch bit 1 and sign `+1` at every level: the positive sequence,
    /// whose one-sided part satisfies `R_{n+1} = (R_n, +1, bar(R_n))`.
    AllPlus,
    /// Branch bit 1 and sign `(-1)^{n+1}` at level `n`: the alternating
    /// sequence, `R_{n+1} = (R_n, (-1)^{n+1}, bar(R_n))`.
    Alternating,
    /// No extension: levels beyond the prefix are undetermined.
    None,
}

/// Finite description of a two-sided infinite folding sequence.
///
/// Level `n` fixes the arithmetic progression `F_n = r_n + 2^{n+1} Z` of
/// indices still undetermined after levels `0..n`, via a branch bit (which
/// half of the remaining index class mod `2^{n+1}` becomes `F_n`) and the
/// sign at the representative `r_n`; the letter at `r_n + k 2^{n+1}` is
/// `sign * (-1)^k`. After all levels at most one index class remains; if it
/// narrows to a single integer its letter is a free choice (`limit_sign`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteSpec {
    /// Explicit per-level choices `(branch_bit, sign)` for levels
    /// `0..prefix.len()`.
    #[serde(default)]
    pub choices: Vec<(u8, Sign)>,
    /// Rule extending the choices beyond the prefix.
    pub rule: ChoiceRule,
    /// Letter at the single limit index, when one exists.
    #[serde(default)]
    pub limit_sign: Option<Sign>,
    /// Number of levels evaluated before falling back to `limit_sign`.
    #[serde(default = "default_level_cap")]
    pub level_cap: u32,
}

fn default_level_cap() -> u32 {
    64
}

impl CompleteSpec {
    /// The positive sequence: every fold sign `+1`, centre letter `+1`.
    pub fn positive() -> Self {
        CompleteSpec {
            choices: Vec::new(),
            rule: ChoiceRule::AllPlus,
            limit_sign: Some(1),
            level_cap: default_level_cap(),
        }
    }

    /// The alternating sequence: fold sign `(-1)^{n+1}` at level `n`,
    /// centre letter `+1`.
    pub fn alternating() -> Self {
        CompleteSpec {
            choices: Vec::new(),
            rule: ChoiceRule::Alternating,
            limit_sign: Some(1),
            level_cap: default_level_cap(),
        }
    }

    /// The two-sided sequence `(bar(S), center, S)` for the one-sided
    /// infinite folding sequence with fold direction `bits[r]` at level `r`
    /// (index 0 carries `center`, index `k > 0` carries letter `k` of `S`).
    pub fn from_fold_bits(bits: &[Sign], rule: ChoiceRule, center: Sign) -> Self {
        CompleteSpec {
            choices: bits.iter().map(|&b| (1u8, b)).collect(),
            rule,
            limit_sign: Some(center),
            level_cap: default_level_cap(),
        }
    }

    /// The per-level `(branch_bit, sign)` choice, if defined.
    pub fn choice(&self, level: u32) -> Option<(u8, Sign)> {
        if let Some(&c) = self.choices.get(level as usize) {
            return Some(c);
        }
        match self.rule {
            ChoiceRule::AllPlus => Some((1, 1)),
            ChoiceRule::Alternating => Some((1, if level % 2 == 0 { -1 } else { 1 })),
            ChoiceRule::None => None,
        }
    }

    /// Letter at index `h`, or `None` if undetermined.
    pub fn value_at(&self, h: i64) -> Option<Sign> {
        let h = i128::from(h);
        let mut e: i128 = 0;
        for n in 0..self.level_cap {
            let (bit, sign) = self.choice(n)?;
            let step = 1i128 << n;
            let r = e + i128::from(bit) * step;
            let period = step * 2;
            if (h - r).rem_euclid(period) == 0 {
                let k = (h - r).div_euclid(period);
                return Some(if k.rem_euclid(2) == 0 { sign } else { -sign });
            }
            e = (r + step) % period;
        }
        self.limit_sign
    }

    /// Letters at indices `lo ..= hi`; `None` entries are undetermined.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<Option<Sign>> {
        (lo..=hi).map(|h| self.value_at(h)).collect()
    }

    /// Letters at indices `lo ..= hi`, failing on any undetermined letter.
    pub fn window_det(&self, lo: i64, hi: i64) -> Result<FoldWord, SeqError> {
        (lo..=hi)
            .map(|h| self.value_at(h).ok_or(SeqError::Undetermined(h)))
            .collect()
    }

    /// Residue of the undetermined index class mod `2^level`.
    pub fn undetermined_class(&self, level: u32) -> Option<(i128, i128)> {
        let mut e: i128 = 0;
        for n in 0..level {
            let (bit, _) = self.choice(n)?;
            let step = 1i128 << n;
            let r = e + i128::from(bit) * step;
            e = (r + step) % (step * 2);
        }
        Some((e, 1i128 << level))
    }

    /// The distinct factors of length `t` of this sequence.
    ///
    /// Scans the window `[-N, N]` with `N = 5 * 2^r`, `2^{r-1} < t <= 2^r`;
    /// by the recurrence theorem every factor of length `t` occurs in every
    /// window of length `10 * 2^r - 2`, so the scan is exhaustive.
    pub fn subword_set(&self, t: usize) -> Result<HashSet<FoldWord>, SeqError> {
        assert!(t >= 1);
        let r = usize::BITS - (t - 1).leading_zeros(); // ceil(log2 t)
        let n = 5i64 * (1i64 << r);
        let w = self.window_det(-n, n)?;
        Ok(w.windows(t).map(|f| f.to_vec()).collect())
    }

    /// Number of distinct factors of length `t` (the complexity function).
    pub fn complexity(&self, t: usize) -> Result<usize, SeqError> {
        Ok(self.subword_set(t)?.len())
    }
}

/// The factors of length `t` of a complete folding sequence, grouped by the
/// four canonical forms built from the level-`n` block `T` (the letters
/// strictly between two consecutive indices of `E_n`).
///
/// For `max(2^n, 7) <= t <= 2^{n+1} - 1` the factors of length `t` are
/// exactly, with `ζ, η` arbitrary signs, `T1` a final segment of the stated
/// block and `T2` an initial segment:
/// 1. `(T1, ζ, T2)` with `T1` from `T`, `T2` from `bar(T)`;
/// 2. `(T1, ζ, T2)` with `T1` from `bar(T)`, `T2` from `T`;
/// 3. `(T1, ζ, bar(T), η, T2)` with `T1`, `T2` from `T`;
/// 4. `(T1, ζ, T, η, T2)` with `T1`, `T2` from `bar(T)`;
/// in forms 1-2 both `T1` and `T2` have length `< 2^n`, which forces
/// `|T1| >= t - 2^n`. The counts are `4(2^{n+1} - t)` for forms 1-2 and
/// `8(t - 2^n)` for forms 3-4, i.e. `4t` in total.
pub fn enumerate_subwords_by_forms(
    spec: &CompleteSpec,
    n: u32,
    t: usize,
) -> Result<[HashSet<FoldWord>; 4], SeqError> {
    let block = 1usize << n; // 2^n
    assert!(t >= block.max(7) && t <= 2 * block - 1, "t out of range");
    // Any index h of E_n works; the block between consecutive E_n indices is
    // T or bar(T) depending on h, and the four forms are symmetric in that
    // swap. The undetermined class residue mod 2^n is such an index.
    let (e, _) = spec
        .undetermined_class(n)
        .ok_or(SeqError::Undetermined(0))?;
    let h = e as i64;
    let t_block = spec.window_det(h + 1, h + block as i64 - 1)?;
    let t_bar = bar(&t_block);
    let final_seg = |w: &[Sign], l: usize| w[w.len() - l..].to_vec();
    let initial_seg = |w: &[Sign], l: usize| w[..l].to_vec();
    let signs = [1i8, -1i8];

    let mut forms: [HashSet<FoldWord>; 4] = Default::default();
    // Forms 1-2: |T1| + 1 + |T2| = t with both parts shorter than the block.
    for l1 in t.saturating_sub(block)..=(block - 1).min(t - 1) {
        let l2 = t - 1 - l1;
        if l2 > block - 1 {
            continue;
        }
        for &z in &signs {
            let mut w1 = final_seg(&t_block, l1);
            w1.push(z);
            w1.extend(initial_seg(&t_bar, l2));
            forms[0].insert(w1);
            let mut w2 = final_seg(&t_bar, l1);
            w2.push(z);
            w2.extend(initial_seg(&t_block, l2));
            forms[1].insert(w2);
        }
    }
    // Forms 3-4: |T1| + 1 + (2^n - 1) + 1 + |T2| = t.
    if t >= block + 1 {
        for l1 in 0..=(t - block - 1) {
            let l2 = t - block - 1 - l1;
            for &z in &signs {
                for &eta in &signs {
                    let mut w3 = final_seg(&t_block, l1);
                    w3.push(z);
                    w3.extend_from_slice(&t_bar);
                    w3.push(eta);
                    w3.extend(initial_seg(&t_block, l2));
                    forms[2].insert(w3);
                    let mut w4 = final_seg(&t_bar, l1);
                    w4.push(z);
                    w4.extend_from_slice(&t_block);
                    w4.push(eta);
                    w4.extend(initial_seg(&t_bar, l2));
                    forms[3].insert(w4);
                }
            }
        }
    }
    Ok(forms)
}

/// Checks the recurrence law: every factor of length `<= 2^r` of the
/// sequence occurs in every window of length `10 * 2^r - 2`.
///
/// `anchors` lists window start indices to test (the caller picks them,
/// e.g. pseudo-randomly). Returns the first `(anchor, factor)` failure.
pub fn recurrence_check(
    spec: &CompleteSpec,
    r: u32,
    anchors: &[i64],
) -> Result<Option<(i64, FoldWord)>, SeqError> {
    let max_len = 1usize << r;
    let mut factors: Vec<FoldWord> = Vec::new();
    for t in 1..=max_len {
        factors.extend(spec.subword_set(t)?);
    }
    let win_len = 10 * (1i64 << r) - 2;
    for &h in anchors {
        let w = spec.window_det(h + 1, h + win_len)?;
        for f in &factors {
            if !w.windows(f.len()).any(|x| x == f.as_slice()) {
                return Ok(Some((h, f.clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_matches_known_words() {
        assert_eq!(gen_n_folding(&[1]), vec![1]);
        assert_eq!(gen_n_folding(&[1, 1]), vec![1, 1, -1]);
        assert_eq!(gen_n_folding(&[-1, 1, 1]), vec![-1, 1, 1, 1, -1, -1, 1]);
    }

    #[test]
    fn bar_is_involution_and_preserves_folding() {
        let w = gen_n_folding(&[1, -1, 1, 1]);
        assert_eq!(bar(&bar(&w)), w);
        assert!(is_n_folding(&bar(&w)));
    }

    #[test]
    fn unfold_produces_next_order() {
        let w = gen_n_folding(&[1, 1]);
        let u = unfold(&w, 1);
        assert_eq!(u.len(), 7);
        assert!(is_n_folding(&u));
        assert_eq!(u[3], 1);
        assert_eq!(&u[4..], &w[..]);
    }

    #[test]
    fn finite_folding_examples() {
        assert!(is_finite_folding(&[1, 1, 1]));
        assert!(!is_finite_folding(&[1, 1, 1, 1]));
    }

    #[test]
    fn positive_window_matches_recursion() {
        let s = CompleteSpec::positive();
        // R_3 = (+ + - + + - -)
        assert_eq!(
            s.window_det(1, 7).unwrap(),
            parse_word("++-++--").unwrap()
        );
        assert_eq!(s.value_at(0), Some(1));
        assert_eq!(s.value_at(-3), Some(1));
    }

    #[test]
    fn complexity_small_lengths() {
        let s = CompleteSpec::positive();
        let expect = [2usize, 4, 8, 12, 18, 23, 28, 32];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(s.complexity(i + 1).unwrap(), c, "t = {}", i + 1);
        }
    }
}
