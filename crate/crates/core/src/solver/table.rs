use std::io::{self, Write};

use rayon::prelude::*;

use super::{GamePosition, Side, SolverConfig};
use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;

/// Marker in the step arrays for positions the cops do not win.
pub const STEPS_NONE: u16 = u16::MAX;
const STEPS_MAX: u16 = u16::MAX - 1;

/// Converged win/step table for the `k`-cop game on one graph.
///
/// `cop_win[m]` / `rob_win[m]` are bitsets over robber vertices for cop
/// multiset `m`, on cop-to-move and robber-to-move positions respectively.
/// Step counts are rounds until capture under optimal play: a cop-to-move
/// position with `s` steps is captured during the cop move of round `s`.
#[derive(Clone, Debug)]
pub struct SolveTable {
    n: usize,
    k: usize,
    words: usize,
    closed: Vec<Vec<usize>>,
    closed_masks: Vec<u64>,
    configs: Vec<u32>,
    ordered_to_canon: Vec<u32>,
    cop_win: Vec<u64>,
    rob_win: Vec<u64>,
    cop_steps: Vec<u16>,
    rob_steps: Vec<u16>,
    iterations: usize,
}

impl SolveTable {
    pub(super) fn solve(g: &LabeledGraph, k: usize, config: &SolverConfig) -> Result<Self> {
        let n = g.num_vertices();
        let words = n.div_ceil(64);
        let needed = estimate_bytes(n, k);
        if needed > u128::from(config.memory_cap_bytes) {
            return Err(Error::MemoryCap {
                needed,
                cap: config.memory_cap_bytes,
            });
        }

        let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
        let mut closed_masks = vec![0u64; n * words];
        for (v, nbrs) in closed.iter().enumerate() {
            for &u in nbrs {
                closed_masks[v * words + u / 64] |= 1 << (u % 64);
            }
        }

        let configs = enumerate_multisets(n, k);
        let m = configs.len() / k;
        let ordered_to_canon = canon_lookup(n, k, &configs);

        let mut table = SolveTable {
            n,
            k,
            words,
            closed,
            closed_masks,
            configs,
            ordered_to_canon,
            cop_win: vec![0; m * words],
            rob_win: vec![0; m * words],
            cop_steps: vec![STEPS_NONE; m * n],
            rob_steps: vec![STEPS_NONE; m * n],
            iterations: 0,
        };
        table.seed_captures();
        table.run_to_fixpoint();
        Ok(table)
    }

    fn seed_captures(&mut self) {
        let (k, n, words) = (self.k, self.n, self.words);
        for c in 0..self.num_configs() {
            for &v in &self.configs[c * k..(c + 1) * k] {
                let v = v as usize;
                self.cop_win[c * words + v / 64] |= 1 << (v % 64);
                self.rob_win[c * words + v / 64] |= 1 << (v % 64);
                self.cop_steps[c * n + v] = 0;
                self.rob_steps[c * n + v] = 0;
            }
        }
    }

    fn run_to_fixpoint(&mut self) {
        let total = self.ordered_len();
        let mut a = vec![0u64; total * self.words];
        let mut b = vec![0u64; total * self.words];
        loop {
            self.iterations += 1;
            let t = u16::try_from(self.iterations).unwrap_or(STEPS_MAX).min(STEPS_MAX);
            let moved = self.cop_reach(&self.rob_win, &mut a, &mut b);
            let mut changed = self.absorb_cop_layer(moved, t);
            changed |= self.absorb_robber_layer(t);
            if !changed {
                break;
            }
        }
    }

    /// For every ordered cop tuple, the union of `rob_win` over all joint
    /// cop moves from it. Returned slice lives in `a` or `b`.
    fn cop_reach<'a>(&self, rob_win: &[u64], a: &'a mut Vec<u64>, b: &'a mut Vec<u64>) -> &'a [u64] {
        let (n, k, w) = (self.n, self.k, self.words);
        a.par_chunks_mut(w).enumerate().for_each(|(o, dst)| {
            let c = self.ordered_to_canon[o] as usize;
            dst.copy_from_slice(&rob_win[c * w..(c + 1) * w]);
        });
        let mut src: &mut Vec<u64> = a;
        let mut dst: &mut Vec<u64> = b;
        let mut stride = 1usize;
        for _ in 0..k {
            let from: &Vec<u64> = src;
            dst.par_chunks_mut(w).enumerate().for_each(|(o, out)| {
                out.fill(0);
                let coord = (o / stride) % n;
                let base = o - coord * stride;
                for &x in &self.closed[coord] {
                    let at = (base + x * stride) * w;
                    for (acc, &v) in out.iter_mut().zip(&from[at..at + w]) {
                        *acc |= v;
                    }
                }
            });
            std::mem::swap(&mut src, &mut dst);
            stride *= n;
        }
        src
    }

    fn absorb_cop_layer(&mut self, moved: &[u64], t: u16) -> bool {
        let (n, k, w) = (self.n, self.k, self.words);
        let configs = &self.configs;
        let ordered_index = |c: usize| ordered_index(n, &configs[c * k..(c + 1) * k]);
        self.cop_win
            .par_chunks_mut(w)
            .zip(self.cop_steps.par_chunks_mut(n))
            .enumerate()
            .map(|(c, (win, steps))| {
                let o = ordered_index(c);
                let mut changed = false;
                for (i, (cur, &add)) in win.iter_mut().zip(&moved[o * w..(o + 1) * w]).enumerate() {
                    let fresh = add & !*cur;
                    if fresh != 0 {
                        changed = true;
                        *cur |= fresh;
                        for_each_bit(fresh, |b| steps[i * 64 + b] = t);
                    }
                }
                changed
            })
            .reduce(|| false, |x, y| x || y)
    }

    fn absorb_robber_layer(&mut self, t: u16) -> bool {
        let (n, w) = (self.n, self.words);
        let masks = &self.closed_masks;
        self.rob_win
            .par_chunks_mut(w)
            .zip(self.rob_steps.par_chunks_mut(n))
            .zip(self.cop_win.par_chunks(w))
            .map(|((rob, steps), cop)| {
                let mut changed = false;
                for r in 0..n {
                    if rob[r / 64] >> (r % 64) & 1 == 1 {
                        continue;
                    }
                    let nbr = &masks[r * w..(r + 1) * w];
                    if nbr.iter().zip(cop).all(|(&m, &s)| m & !s == 0) {
                        rob[r / 64] |= 1 << (r % 64);
                        steps[r] = t;
                        changed = true;
                    }
                }
                changed
            })
            .reduce(|| false, |x, y| x || y)
    }

    /// Applies the one-move operator to the stored table and reports
    /// whether it reproduces the stored win sets exactly.
    pub fn verify_fixpoint(&self) -> bool {
        let total = self.ordered_len();
        let mut a = vec![0u64; total * self.words];
        let mut b = vec![0u64; total * self.words];
        let moved = self.cop_reach(&self.rob_win, &mut a, &mut b);
        let (n, k, w) = (self.n, self.k, self.words);
        for c in 0..self.num_configs() {
            let o = ordered_index(n, &self.configs[c * k..(c + 1) * k]);
            let mut cop = moved[o * w..(o + 1) * w].to_vec();
            for &v in self.config(c) {
                cop[v as usize / 64] |= 1 << (v % 64);
            }
            if cop != self.cop_win[c * w..(c + 1) * w] {
                return false;
            }
            let mut rob = vec![0u64; w];
            for r in 0..n {
                let nbr = &self.closed_masks[r * w..(r + 1) * w];
                if nbr.iter().zip(&cop).all(|(&m, &s)| m & !s == 0) {
                    rob[r / 64] |= 1 << (r % 64);
                }
            }
            if rob != self.rob_win[c * w..(c + 1) * w] {
                return false;
            }
        }
        true
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_cops(&self) -> usize {
        self.k
    }

    pub fn num_configs(&self) -> usize {
        self.configs.len() / self.k
    }

    /// Sweeps performed before the table stopped changing.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    fn ordered_len(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    fn config(&self, c: usize) -> &[u32] {
        &self.configs[c * self.k..(c + 1) * self.k]
    }

    /// Canonical index of a cop multiset (any order).
    pub fn config_index(&self, cops: &[usize]) -> Result<usize> {
        if cops.len() != self.k {
            return Err(Error::Precondition(format!(
                "table is for {} cops, got {}",
                self.k,
                cops.len()
            )));
        }
        let mut o = 0usize;
        for &c in cops {
            if c >= self.n {
                return Err(Error::InvalidVertex(c));
            }
            o = o * self.n + c;
        }
        Ok(self.ordered_to_canon[o] as usize)
    }

    fn check_robber(&self, r: usize) -> Result<()> {
        if r >= self.n {
            Err(Error::InvalidVertex(r))
        } else {
            Ok(())
        }
    }

    fn bit(set: &[u64], c: usize, words: usize, r: usize) -> bool {
        set[c * words + r / 64] >> (r % 64) & 1 == 1
    }

    /// Whether the cops win from `pos`.
    pub fn is_win(&self, pos: &GamePosition) -> Result<bool> {
        self.check_robber(pos.robber)?;
        let c = self.config_index(&pos.cops)?;
        let set = match pos.to_move {
            Side::Cops => &self.cop_win,
            Side::Robber => &self.rob_win,
        };
        Ok(Self::bit(set, c, self.words, pos.robber))
    }

    /// Rounds to capture under optimal play, for cop-winning positions.
    pub fn steps(&self, pos: &GamePosition) -> Result<Option<u16>> {
        self.check_robber(pos.robber)?;
        let c = self.config_index(&pos.cops)?;
        let s = match pos.to_move {
            Side::Cops => self.cop_steps[c * self.n + pos.robber],
            Side::Robber => self.rob_steps[c * self.n + pos.robber],
        };
        Ok((s != STEPS_NONE).then_some(s))
    }

    fn cop_winning_config(&self, c: usize) -> bool {
        let w = self.words;
        let row = &self.cop_win[c * w..(c + 1) * w];
        (0..w).all(|i| {
            let live = if i + 1 == w && !self.n.is_multiple_of(64) {
                (1u64 << (self.n % 64)) - 1
            } else {
                u64::MAX
            };
            row[i] & live == live
        })
    }

    /// Some placement beats every robber placement.
    pub fn cops_win(&self) -> bool {
        self.winning_placement().is_some()
    }

    /// First cop multiset (lexicographically) that wins against every robber
    /// placement.
    pub fn winning_placement(&self) -> Option<Vec<usize>> {
        (0..self.num_configs())
            .find(|&c| self.cop_winning_config(c))
            .map(|c| self.config(c).iter().map(|&v| v as usize).collect())
    }

    /// Longest-surviving robber placement against `cops`: the first vertex
    /// that is not a cop win if any, else the one with most steps.
    pub fn best_robber_placement(&self, cops: &[usize]) -> Result<usize> {
        let c = self.config_index(cops)?;
        let key = |r: usize| match self.cop_steps[c * self.n + r] {
            STEPS_NONE => u32::MAX,
            s => u32::from(s),
        };
        Ok((0..self.n).max_by_key(|&r| (key(r), std::cmp::Reverse(r))).unwrap_or(0))
    }

    /// Joint move aligned with `pos.cops` that strictly decreases the step
    /// count; ties go to the lexicographically smallest target multiset.
    pub fn optimal_cop_move(&self, pos: &GamePosition) -> Result<Vec<usize>> {
        if pos.to_move != Side::Cops {
            return Err(Error::Precondition("cop move requested on a robber-to-move position".into()));
        }
        self.check_robber(pos.robber)?;
        let c = self.config_index(&pos.cops)?;
        let s = self.cop_steps[c * self.n + pos.robber];
        if s == STEPS_NONE || s == 0 {
            return Err(Error::NotWinning);
        }
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        let choices: Vec<&[usize]> = pos.cops.iter().map(|&v| self.closed[v].as_slice()).collect();
        let mut idx = vec![0usize; self.k];
        loop {
            let targets: Vec<usize> = idx.iter().zip(&choices).map(|(&i, ch)| ch[i]).collect();
            let c2 = self.config_index(&targets)?;
            let rs = self.rob_steps[c2 * self.n + pos.robber];
            if rs != STEPS_NONE && rs < s {
                let mut sorted = targets.clone();
                sorted.sort_unstable();
                if best.as_ref().is_none_or(|(b, _)| sorted < *b) {
                    best = Some((sorted, targets));
                }
            }
            if !advance(&mut idx, &choices) {
                break;
            }
        }
        best.map(|(_, t)| t).ok_or(Error::NotWinning)
    }

    /// Robber reply: the first successor the cops do not win from, otherwise
    /// the successor with the longest capture count.
    pub fn optimal_robber_move(&self, pos: &GamePosition) -> Result<usize> {
        if pos.to_move != Side::Robber {
            return Err(Error::Precondition("robber move requested on a cop-to-move position".into()));
        }
        self.check_robber(pos.robber)?;
        if pos.is_capture() {
            return Err(Error::Precondition("robber is already captured".into()));
        }
        let c = self.config_index(&pos.cops)?;
        let succ = &self.closed[pos.robber];
        if let Some(&r) = succ.iter().find(|&&r| !Self::bit(&self.cop_win, c, self.words, r)) {
            return Ok(r);
        }
        let best = succ
            .iter()
            .copied()
            .max_by_key(|&r| (self.cop_steps[c * self.n + r], std::cmp::Reverse(r)))
            .unwrap_or(pos.robber);
        Ok(best)
    }

    /// Debug dump, one line per position:
    /// `pos=<cops>/<robber>/<side> win=<0|1> steps=<u>`.
    pub fn dump(&self, out: &mut impl Write) -> io::Result<()> {
        for c in 0..self.num_configs() {
            let cops: Vec<usize> = self.config(c).iter().map(|&v| v as usize).collect();
            for side in [Side::Cops, Side::Robber] {
                for r in 0..self.n {
                    let pos = GamePosition {
                        cops: cops.clone(),
                        robber: r,
                        to_move: side,
                    };
                    let (set, steps) = match side {
                        Side::Cops => (&self.cop_win, &self.cop_steps),
                        Side::Robber => (&self.rob_win, &self.rob_steps),
                    };
                    let win = Self::bit(set, c, self.words, r);
                    let s = steps[c * self.n + r];
                    if win {
                        writeln!(out, "pos={pos} win=1 steps={s}")?;
                    } else {
                        writeln!(out, "pos={pos} win=0 steps=none")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn advance(idx: &mut [usize], choices: &[&[usize]]) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < choices[i].len() {
            return true;
        }
        idx[i] = 0;
    }
    false
}

fn for_each_bit(mut word: u64, mut f: impl FnMut(usize)) {
    while word != 0 {
        let b = word.trailing_zeros() as usize;
        f(b);
        word &= word - 1;
    }
}

fn ordered_index(n: usize, tuple: &[u32]) -> usize {
    tuple.iter().fold(0, |acc, &v| acc * n + v as usize)
}

/// Sorted `k`-multisets over `0..n` in lexicographic order, flattened.
fn enumerate_multisets(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    loop {
        out.extend_from_slice(&cur);
        // next non-decreasing tuple
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (cur[i] as usize) + 1 < n {
                let v = cur[i] + 1;
                for x in &mut cur[i..] {
                    *x = v;
                }
                break;
            }
        }
    }
}

fn canon_lookup(n: usize, k: usize, configs: &[u32]) -> Vec<u32> {
    let total = n.pow(k as u32);
    let mut lookup = vec![u32::MAX; total];
    for (c, t) in configs.chunks(k).enumerate() {
        lookup[ordered_index(n, t)] = c as u32;
    }
    let mut tuple = vec![0u32; k];
    for o in 0..total {
        if lookup[o] != u32::MAX {
            continue;
        }
        let mut rest = o;
        for slot in tuple.iter_mut().rev() {
            *slot = (rest % n) as u32;
            rest /= n;
        }
        tuple.sort_unstable();
        lookup[o] = lookup[ordered_index(n, &tuple)];
    }
    lookup
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Upper estimate of the bytes a solve allocates.
pub(crate) fn estimate_bytes(n: usize, k: usize) -> u128 {
    let n128 = n as u128;
    let words = n.div_ceil(64) as u128;
    let ordered = n128.checked_pow(k as u32).unwrap_or(u128::MAX / 64);
    let configs = binomial(n128 + k as u128 - 1, k as u128);
    let ordered_bytes = ordered.saturating_mul(2 * words * 8 + 4);
    let config_bytes = configs.saturating_mul(2 * words * 8 + 2 * n128 * 2 + k as u128 * 4);
    ordered_bytes.saturating_add(config_bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{fibonacci_cube, path};
    use crate::solver::{cop_win_k, SolverConfig};

    #[test]
    fn multisets_in_lex_order() {
        assert_eq!(enumerate_multisets(3, 2), vec![0, 0, 0, 1, 0, 2, 1, 1, 1, 2, 2, 2]);
        assert_eq!(enumerate_multisets(2, 1), vec![0, 1]);
    }

    #[test]
    fn canon_lookup_sorts() {
        let configs = enumerate_multisets(3, 2);
        let lookup = canon_lookup(3, 2, &configs);
        // (2,0) → (0,2) which is config 2
        assert_eq!(lookup[2 * 3], 2);
        assert_eq!(lookup[2], 2);
    }

    #[test]
    fn estimate_covers_lucas8() {
        // 47 vertices, 3 cops
        assert!(estimate_bytes(47, 3) < u128::from(SolverConfig::default().memory_cap_bytes));
    }

    #[test]
    fn capture_in_one_moves_onto_robber() {
        let g = path(3).unwrap();
        let (_, t) = cop_win_k(&g, 1).unwrap();
        let pos = GamePosition::new(vec![0], 1, Side::Cops);
        assert_eq!(t.steps(&pos).unwrap(), Some(1));
        assert_eq!(t.optimal_cop_move(&pos).unwrap(), vec![1]);
    }

    #[test]
    fn p3_cop_at_end_moves_to_center() {
        // By hand: cop at 0, robber at 2; cop steps to 1, robber is trapped.
        let g = path(3).unwrap();
        let (_, t) = cop_win_k(&g, 1).unwrap();
        let pos = GamePosition::new(vec![0], 2, Side::Cops);
        assert_eq!(t.steps(&pos).unwrap(), Some(2));
        assert_eq!(t.optimal_cop_move(&pos).unwrap(), vec![1]);
    }

    #[test]
    fn gamma3_two_cops_progress() {
        let g = fibonacci_cube(3).unwrap();
        let v = |s: &str| g.vertex_named(s).unwrap();
        let (win, t) = cop_win_k(&g, 2).unwrap();
        assert!(win);
        let pos = GamePosition::new(vec![v("000"), v("000")], v("101"), Side::Cops);
        let before = t.steps(&pos).unwrap().unwrap();
        let mv = t.optimal_cop_move(&pos).unwrap();
        let after = t
            .steps(&GamePosition::new(mv.clone(), v("101"), Side::Robber))
            .unwrap()
            .unwrap();
        assert!(after < before);
        // Robber then has no safe square.
        let r = t
            .optimal_robber_move(&GamePosition::new(mv.clone(), v("101"), Side::Robber))
            .unwrap();
        let next = GamePosition::new(mv, r, Side::Cops);
        assert_eq!(t.steps(&next).unwrap(), Some(after));
    }

    #[test]
    fn not_winning_errors() {
        let g = fibonacci_cube(5).unwrap();
        let (_, t) = cop_win_k(&g, 1).unwrap();
        let pos = GamePosition::new(vec![0], g.num_vertices() - 1, Side::Cops);
        assert!(matches!(t.optimal_cop_move(&pos), Err(Error::NotWinning)));
    }

    #[test]
    fn dump_format() {
        let g = path(2).unwrap();
        let (_, t) = cop_win_k(&g, 1).unwrap();
        let mut buf = Vec::new();
        t.dump(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("pos=0/0/C win=1 steps=0\npos=0/1/C win=1 steps=1\n"));
    }
}
