//! Block-matching cop strategy on Fibonacci cubes.
//!
//! Coordinates are cut into contiguous blocks of width 3 or 4 and cop `i`
//! owns block `i`. In phase 1 every cop copies the robber on its own block
//! only. Once every cop is matched on its own block (phase 2.2), or all but
//! one are and the robber keeps moving on the remaining block (phase 2.1),
//! cops sweep the other blocks, mirroring robber moves they already match and
//! probing from `0…0` where the robber sits at block distance 2. If the robber
//! keeps moving on a single block for a long time, two cops that match it
//! everywhere else play the small game on that block read off a solved table.
//!
//! Cops that are not forced to mirror on their own block may trade the scripted
//! move for another distance-reducing flip. The trade is picked by a one-ply
//! look-ahead on the robber's replies, with positions played before ranked
//! lower so the cops do not cycle with a deterministic robber.
//!
//! All positions are handled as packed labels (`x_1` in bit 0).

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand_chacha::ChaCha8Rng;

use super::{Arena, CopStrategy, Turn};
use crate::error::{Error, Result};
use crate::graphs::{fibonacci_strings, BitLabel, LabeledGraph};
use crate::solver::{cop_win_k, GamePosition, Side, SolveTable};

fn legal(bits: u64) -> bool {
    bits & (bits >> 1) == 0
}

fn ham(a: u64, b: u64) -> u32 {
    (a ^ b).count_ones()
}

/// Block value written as a string, first character in bit 0.
fn bv(s: &str) -> u64 {
    s.bytes().enumerate().map(|(i, b)| u64::from(b == b'1') << i).sum()
}

/// Contiguous blocks of `width` coordinates; the last one may be shorter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    n: usize,
    width: usize,
    blocks: Vec<(usize, usize)>,
}

impl BlockPartition {
    pub fn new(n: usize, width: usize) -> Result<Self> {
        if width == 0 || n == 0 || n > 63 {
            return Err(Error::Precondition(format!("cannot cut n={n} into blocks of width {width}")));
        }
        let blocks = (0..n).step_by(width).map(|s| (s, width.min(n - s))).collect();
        Ok(BlockPartition { n, width, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of blocks, which is also the number of cops.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// 1-based inclusive coordinate range of block `j`.
    pub fn range(&self, j: usize) -> (usize, usize) {
        let (s, l) = self.blocks[j];
        (s + 1, s + l)
    }

    pub fn block_len(&self, j: usize) -> usize {
        self.blocks[j].1
    }

    pub fn mask(&self, j: usize) -> u64 {
        let (s, l) = self.blocks[j];
        ((1u64 << l) - 1) << s
    }

    /// Bits of block `j`, shifted down so the first coordinate is bit 0.
    pub fn value(&self, bits: u64, j: usize) -> u64 {
        (bits & self.mask(j)) >> self.blocks[j].0
    }

    pub fn with_value(&self, bits: u64, j: usize, v: u64) -> u64 {
        (bits & !self.mask(j)) | ((v << self.blocks[j].0) & self.mask(j))
    }

    pub fn block_distance(&self, a: u64, b: u64, j: usize) -> u32 {
        ((a ^ b) & self.mask(j)).count_ones()
    }

    /// Block containing 0-based bit `bit`.
    pub fn block_of_bit(&self, bit: usize) -> usize {
        bit / self.width
    }

    /// Block of the lowest differing coordinate, `None` if equal.
    pub fn changed_block(&self, a: u64, b: u64) -> Option<usize> {
        let d = a ^ b;
        (d != 0).then(|| self.block_of_bit(d.trailing_zeros() as usize))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Phase {
    Phase1,
    /// All but one own block matched; the robber keeps moving on it.
    Phase2_1,
    /// Every cop matched on its own block.
    Phase2_2,
}

impl Phase {
    pub fn as_str(&self) -> &'static str {
        match self {
            Phase::Phase1 => "1",
            Phase::Phase2_1 => "2.1",
            Phase::Phase2_2 => "2.2",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What one cop did on one turn, for traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CopAction {
    Stay,
    Capture,
    /// Move on the cop's own block.
    Own,
    /// Copied the robber's last flip on a block it already matched.
    Mirror,
    /// Reached block distance 0.
    Match,
    /// Reduced block distance without matching.
    Closer,
    /// Stepped off `0…0` toward a block at distance 2.
    Probe,
    /// Stepped back to `0…0` after a probe the robber dodged.
    Return,
    /// Move taken from the projected two-cop table.
    Endgame,
    /// No rule applied; took any legal distance-reducing flip.
    Fallback,
}

impl CopAction {
    pub fn as_str(&self) -> &'static str {
        match self {
            CopAction::Stay => "stay",
            CopAction::Capture => "capture",
            CopAction::Own => "own",
            CopAction::Mirror => "mirror",
            CopAction::Match => "match",
            CopAction::Closer => "closer",
            CopAction::Probe => "probe",
            CopAction::Return => "return",
            CopAction::Endgame => "endgame",
            CopAction::Fallback => "fallback",
        }
    }
}

#[derive(Clone, Debug)]
struct Endgame {
    graph: LabeledGraph,
    table: SolveTable,
}

/// Everything the block strategy remembers between turns.
#[derive(Clone, Debug)]
pub struct CopStrategyState {
    partition: BlockPartition,
    phase: Phase,
    matched: Vec<Vec<bool>>,
    pending: Vec<Option<usize>>,
    unmatched_block: Option<usize>,
    endgame: Option<usize>,
    trigger: usize,
    recent: VecDeque<usize>,
    visits: HashMap<(Vec<u64>, u64), u32>,
    last_robber: Option<u64>,
    fallbacks: usize,
    undersized: bool,
    actions: Vec<CopAction>,
    turns: usize,
    tables: HashMap<(usize, bool, bool), Endgame>,
}

impl CopStrategyState {
    /// Fresh state for `Γ_n` with blocks of `width` (3 needs `n ≥ 6`, 4 needs
    /// `n ≥ 9`). The robber-run trigger defaults to `3n` rounds.
    pub fn new(n: usize, width: usize) -> Result<Self> {
        let min_n = match width {
            3 => 6,
            4 => 9,
            _ => {
                return Err(Error::Precondition(format!("block width must be 3 or 4, got {width}")));
            }
        };
        if n < min_n {
            return Err(Error::Incompatible {
                strategy: format!("blocks{width}"),
                reason: format!("needs n >= {min_n}, got n = {n}"),
            });
        }
        let partition = BlockPartition::new(n, width)?;
        let k = partition.len();
        Ok(CopStrategyState {
            phase: Phase::Phase1,
            matched: vec![vec![false; k]; k],
            pending: vec![None; k],
            unmatched_block: None,
            endgame: None,
            trigger: 3 * n,
            recent: VecDeque::new(),
            visits: HashMap::new(),
            last_robber: None,
            fallbacks: 0,
            undersized: k < 3,
            actions: vec![CopAction::Stay; k],
            turns: 0,
            tables: HashMap::new(),
            partition,
        })
    }

    pub fn with_trigger(mut self, rounds: usize) -> Self {
        self.trigger = rounds.max(1);
        self
    }

    pub fn partition(&self) -> &BlockPartition {
        &self.partition
    }

    pub fn num_cops(&self) -> usize {
        self.partition.len()
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    /// Cop `cop` agreed with the robber on `block` at the end of the last
    /// cop turn.
    pub fn matched(&self, cop: usize, block: usize) -> bool {
        self.matched[cop][block]
    }

    pub fn pending_return(&self, cop: usize) -> Option<usize> {
        self.pending[cop]
    }

    /// The own block left unmatched when phase 2.1 started.
    pub fn unmatched_block(&self) -> Option<usize> {
        self.unmatched_block
    }

    pub fn endgame_block(&self) -> Option<usize> {
        self.endgame
    }

    pub fn trigger_rounds(&self) -> usize {
        self.trigger
    }

    pub fn fallbacks(&self) -> usize {
        self.fallbacks
    }

    /// Set for `k < 3`, where the endgame has no spare cop.
    pub fn undersized(&self) -> bool {
        self.undersized
    }

    pub fn turns(&self) -> usize {
        self.turns
    }

    pub fn last_actions(&self) -> &[CopAction] {
        &self.actions
    }

    /// Cops 0..k placed on `0^n`.
    pub fn initial_labels(&self) -> Vec<u64> {
        vec![0; self.num_cops()]
    }

    fn note_robber_move(&mut self, flip: Option<usize>) {
        if let Some(b) = flip {
            self.recent.push_back(b);
            if self.recent.len() > self.trigger {
                self.recent.pop_front();
            }
        }
    }

    fn long_run_on(&self, j: usize) -> bool {
        // All but at most one of the last `trigger` moves were on `j`.
        let p = &self.partition;
        self.recent.len() >= self.trigger && self.recent.iter().filter(|&&b| p.block_of_bit(b) != j).count() <= 1
    }

    fn turn_start_transitions(&mut self, last_move: Option<usize>) {
        let k = self.num_cops();
        match self.phase {
            Phase::Phase1 => {
                let open: Vec<usize> = (0..k).filter(|&i| !self.matched[i][i]).collect();
                if let [l] = open[..] {
                    if last_move == Some(l) && self.long_run_on(l) {
                        self.phase = Phase::Phase2_1;
                        self.unmatched_block = Some(l);
                        self.endgame = Some(l);
                    }
                }
            }
            Phase::Phase2_1 | Phase::Phase2_2 => {
                if last_move.is_some() {
                    self.endgame = (0..k).find(|&j| self.long_run_on(j));
                }
            }
        }
    }

    fn step_closer(&self, c: u64, r: u64, j: usize) -> Option<u64> {
        let n = self.partition.n;
        let diff = (c ^ r) & self.partition.mask(j);
        (0..64)
            .filter(|b| diff >> b & 1 == 1)
            .map(|b| c ^ (1 << b))
            .filter(|&x| legal(x))
            .min_by_key(|&x| BitLabel::new(x, n).lex_key())
    }

    fn probe_target(&self, c: u64, r: u64, j: usize) -> Option<u64> {
        let p = &self.partition;
        if p.value(c, j) != 0 || p.block_distance(c, r, j) != 2 {
            return None;
        }
        let rv = p.value(r, j);
        let v = match p.block_len(j) {
            3 if rv == bv("101") => bv("001"),
            4 if rv == bv("0101") || rv == bv("1001") => bv("0001"),
            4 if rv == bv("1010") => bv("1000"),
            _ => return None,
        };
        let x = p.with_value(c, j, v);
        legal(x).then_some(x)
    }

    /// Preferred reducing move on block `j`; the flag marks a probe.
    fn approach(&self, c: u64, r: u64, j: usize, flip: Option<usize>, was_matched: bool) -> Option<(u64, CopAction, bool)> {
        let p = &self.partition;
        let d = p.block_distance(c, r, j);
        if d == 0 {
            return None;
        }
        let mirror = flip
            .filter(|&b| p.block_of_bit(b) == j && (c ^ r) >> b & 1 == 1)
            .map(|b| c ^ (1 << b))
            .filter(|&x| legal(x));
        let reached = |x: u64| if p.block_distance(x, r, j) == 0 { CopAction::Match } else { CopAction::Closer };
        if was_matched {
            if let Some(x) = mirror {
                return Some((x, CopAction::Mirror, false));
            }
        }
        if let Some(x) = self.probe_target(c, r, j) {
            return Some((x, CopAction::Probe, true));
        }
        if let Some(x) = mirror {
            return Some((x, reached(x), false));
        }
        self.step_closer(c, r, j).map(|x| (x, reached(x), false))
    }

    fn phase1_move(&mut self, i: usize, c: u64, r: u64, flip: Option<usize>) -> (u64, CopAction) {
        if ham(c, r) <= 1 {
            return (r, CopAction::Capture);
        }
        if self.partition.block_distance(c, r, i) == 0 {
            return (c, CopAction::Stay);
        }
        let p = &self.partition;
        let mirror = flip
            .filter(|&b| p.block_of_bit(b) == i && (c ^ r) >> b & 1 == 1)
            .map(|b| c ^ (1 << b))
            .filter(|&x| legal(x));
        match mirror.or_else(|| self.step_closer(c, r, i)) {
            Some(x) => (x, CopAction::Own),
            None => {
                self.fallbacks += 1;
                (c, CopAction::Fallback)
            }
        }
    }

    fn sweep_move(
        &mut self,
        i: usize,
        c: u64,
        r: u64,
        last_move: Option<usize>,
        flip: Option<usize>,
        exclude: Option<usize>,
    ) -> (u64, CopAction) {
        let k = self.num_cops();
        let was = self.matched[i].clone();

        // Keep the own block matched.
        if last_move == Some(i) && was[i] {
            if let Some((x, _, _)) = self.approach(c, r, i, flip, true) {
                return (x, CopAction::Own);
            }
        }

        // Resolve an outstanding probe.
        if let Some(pb) = self.pending[i].take() {
            let d = self.partition.block_distance(c, r, pb);
            if last_move == Some(pb) {
                let back = self.partition.with_value(c, pb, 0);
                if d > 0 && ham(back, c) == 1 && ham(back, r) < ham(c, r) && legal(back) {
                    return (back, CopAction::Return);
                }
            } else if d > 0 {
                if let Some(x) = self.step_closer(c, r, pb) {
                    return (x, CopAction::Match);
                }
            }
        }

        // React on the block the robber just used.
        if let Some(j) = last_move.filter(|&j| Some(j) != exclude) {
            if let Some((x, a, probe)) = self.approach(c, r, j, flip, was[j]) {
                if probe {
                    self.pending[i] = Some(j);
                }
                return (x, a);
            }
        }

        // Spare move: lowest unmatched block, the excluded one last.
        let order = (0..k).filter(|&b| Some(b) != exclude).chain(exclude);
        for b in order {
            if let Some((x, a, probe)) = self.approach(c, r, b, None, false) {
                if probe {
                    self.pending[i] = Some(b);
                }
                return (x, a);
            }
        }

        if c == r {
            return (c, CopAction::Stay);
        }
        let n = self.partition.n;
        let diff = c ^ r;
        let fallback = (0..n)
            .filter(|b| diff >> b & 1 == 1)
            .map(|b| c ^ (1 << b))
            .filter(|&x| legal(x))
            .min_by_key(|&x| BitLabel::new(x, n).lex_key());
        self.fallbacks += 1;
        (fallback.unwrap_or(c), CopAction::Fallback)
    }

    fn endgame_table(&mut self, l: usize, r: u64) -> Result<&Endgame> {
        let p = &self.partition;
        let (s, len) = (p.blocks[l].0, p.blocks[l].1);
        let left = s > 0 && r >> (s - 1) & 1 == 1;
        let right = s + len < p.n && r >> (s + len) & 1 == 1;
        let key = (l, left, right);
        if let std::collections::hash_map::Entry::Vacant(e) = self.tables.entry(key) {
            let labels = fibonacci_strings(len)
                .into_iter()
                .filter(|v| !(left && v.get(1)) && !(right && v.get(len)));
            let graph = LabeledGraph::induced(len, labels)?;
            let (_, table) = cop_win_k(&graph, 2)?;
            e.insert(Endgame { graph, table });
        }
        Ok(&self.tables[&key])
    }

    /// Lifted table moves for two helpers, `None` when the table has no
    /// progress move.
    fn endgame_moves(&mut self, l: usize, c0: u64, c1: u64, r: u64) -> Result<Option<(u64, u64)>> {
        let p = self.partition.clone();
        let len = p.block_len(l);
        let eg = self.endgame_table(l, r)?;
        let proj = |x: u64| eg.graph.vertex_of(&BitLabel::new(p.value(x, l), len));
        let (Some(a), Some(b), Some(rv)) = (proj(c0), proj(c1), proj(r)) else {
            return Ok(None);
        };
        let pos = GamePosition::new(vec![a, b], rv, Side::Cops);
        if pos.is_capture() {
            return Ok(None);
        }
        match eg.table.optimal_cop_move(&pos) {
            Ok(t) => {
                let (ta, tb) = if a <= b { (t[0], t[1]) } else { (t[1], t[0]) };
                let lift = |x: u64, v: usize| p.with_value(x, l, eg.graph.label(v).bits());
                Ok(Some((lift(c0, ta), lift(c1, tb))))
            }
            Err(Error::NotWinning) => Ok(None),
            Err(e) => Err(e),
        }
    }

    fn phase2_moves(
        &mut self,
        cb: &[u64],
        r: u64,
        last_move: Option<usize>,
        flip: Option<usize>,
    ) -> Result<Vec<(u64, CopAction)>> {
        let k = self.num_cops();
        let mut out: Vec<Option<(u64, CopAction)>> = cb
            .iter()
            .map(|&c| (ham(c, r) <= 1).then_some((r, CopAction::Capture)))
            .collect();

        if let Some(l) = self.endgame {
            let p = &self.partition;
            let helpers: Vec<usize> = (0..k)
                .filter(|&i| i != l && out[i].is_none())
                .filter(|&i| (0..k).all(|b| b == l || p.block_distance(cb[i], r, b) == 0))
                .take(2)
                .collect();
            if let [h0, h1] = helpers[..] {
                if let Some((x0, x1)) = self.endgame_moves(l, cb[h0], cb[h1], r)? {
                    out[h0] = Some((x0, CopAction::Endgame));
                    out[h1] = Some((x1, CopAction::Endgame));
                    self.pending[h0] = None;
                    self.pending[h1] = None;
                }
            }
        }

        let exclude_for = |i: usize, eg: Option<usize>| eg.filter(|&l| l != i);
        let eg = self.endgame;
        let n = self.partition.n;
        let mut res: Vec<Option<(u64, CopAction)>> = out.clone();
        // Cops whose paper move may be traded: (scripted move, options).
        let mut free: Vec<Option<((u64, CopAction), Vec<(u64, CopAction)>)>> = vec![None; k];
        for i in 0..k {
            if out[i].is_some() {
                continue;
            }
            let c = cb[i];
            let preferred = self.sweep_move(i, c, r, last_move, flip, exclude_for(i, eg));
            let own_forced = last_move == Some(i) && self.matched[i][i];
            res[i] = Some(preferred);
            if own_forced || matches!(preferred.1, CopAction::Stay | CopAction::Capture) {
                continue;
            }
            let own = self.partition.mask(i);
            let mut opts = vec![preferred];
            for b in 0..n {
                let m = 1u64 << b;
                let x = c ^ m;
                if (c ^ r) & m == 0 || !legal(x) || x == preferred.0 || (self.matched[i][i] && own & m != 0) {
                    continue;
                }
                let j = self.partition.block_of_bit(b);
                let a = if self.partition.block_distance(x, r, j) == 0 { CopAction::Match } else { CopAction::Closer };
                opts.push((x, a));
            }
            free[i] = Some((preferred, opts));
        }

        // One-ply look-ahead over the free cops: minimize the robber's best
        // reply (distance to the nearest cop), then how often the resulting
        // position was already played, then how many replies reach the
        // best distance, then the number of departures from the scripted moves.
        let replies: Vec<u64> = std::iter::once(r)
            .chain((0..n).map(|b| r ^ 1 << b).filter(|&x| legal(x)))
            .collect();
        let idx: Vec<usize> = (0..k).filter(|&i| free[i].is_some()).collect();
        let opts: Vec<&Vec<(u64, CopAction)>> = idx.iter().map(|&i| &free[i].as_ref().expect("free").1).collect();
        let mut pick = vec![0usize; idx.len()];
        let mut best: Option<((u32, u32, usize, usize), Vec<usize>)> = None;
        loop {
            let mut planned: Vec<u64> = res.iter().map(|m| m.expect("every cop has a move").0).collect();
            for (s, &i) in idx.iter().enumerate() {
                planned[i] = opts[s][pick[s]].0;
            }
            let nearest: Vec<u32> = replies.iter().map(|&y| planned.iter().map(|&c| ham(c, y)).min().unwrap_or(u32::MAX)).collect();
            let top = nearest.iter().copied().max().unwrap_or(0);
            let seen = self.visits.get(&(planned.clone(), r)).copied().unwrap_or(0);
            let key = (top, seen, nearest.iter().filter(|&&d| d == top).count(), pick.iter().filter(|&&p| p != 0).count());
            if best.as_ref().is_none_or(|(b, _)| key < *b) {
                best = Some((key, pick.clone()));
            }
            // Odometer over the option lists.
            let mut s = 0;
            while s < pick.len() {
                pick[s] += 1;
                if pick[s] < opts[s].len() {
                    break;
                }
                pick[s] = 0;
                s += 1;
            }
            if s == pick.len() {
                break;
            }
        }
        if let Some((_, pick)) = best {
            for (s, &i) in idx.iter().enumerate() {
                res[i] = Some(opts[s][pick[s]]);
            }
        }
        let planned: Vec<u64> = res.iter().map(|m| m.expect("every cop has a move").0).collect();
        *self.visits.entry((planned, r)).or_insert(0) += 1;
        for i in 0..k {
            if let (Some((preferred, _)), Some(m)) = (&free[i], res[i]) {
                if preferred.1 == CopAction::Probe && m.0 != preferred.0 {
                    self.pending[i] = None;
                }
            }
        }
        let res: Vec<(u64, CopAction)> = res.into_iter().map(|m| m.expect("every cop has a move")).collect();
        Ok(res)
    }
}

/// One cop turn of the block strategy. `robber_last_move` is the block the
/// robber changed on its previous move (`None` if it stayed or has not moved
/// yet). Returns new cop vertices in the same order as `cops`.
pub fn block_cop_strategy_step(
    g: &LabeledGraph,
    state: &mut CopStrategyState,
    cops: &[usize],
    robber: usize,
    robber_last_move: Option<usize>,
) -> Result<Vec<usize>> {
    let k = state.num_cops();
    if g.dimension() != state.partition.n {
        return Err(Error::Precondition(format!(
            "state is for n = {}, graph has dimension {}",
            state.partition.n,
            g.dimension()
        )));
    }
    if cops.len() != k {
        return Err(Error::Precondition(format!("expected {k} cops, got {}", cops.len())));
    }
    for &v in cops.iter().chain(std::iter::once(&robber)) {
        if v >= g.num_vertices() {
            return Err(Error::InvalidVertex(v));
        }
    }
    let cb: Vec<u64> = cops.iter().map(|&c| g.label(c).bits()).collect();
    let r = g.label(robber).bits();
    let flip = state.last_robber.and_then(|p| {
        let d = p ^ r;
        (d.count_ones() == 1).then(|| d.trailing_zeros() as usize)
    });

    state.note_robber_move(flip);
    state.turn_start_transitions(robber_last_move);

    let moves: Vec<(u64, CopAction)> = match state.phase {
        Phase::Phase1 => (0..k).map(|i| state.phase1_move(i, cb[i], r, flip)).collect(),
        _ => state.phase2_moves(&cb, r, robber_last_move, flip)?,
    };

    let n = state.partition.n;
    let mut next = Vec::with_capacity(k);
    for (i, &(x, _)) in moves.iter().enumerate() {
        let label = BitLabel::new(x, n);
        if !legal(x) || ham(x, cb[i]) > 1 {
            return Err(Error::IllegalLabel { label: label.to_string() });
        }
        next.push(g.vertex_of(&label).ok_or(Error::IllegalLabel { label: label.to_string() })?);
    }

    let p = &state.partition;
    for (i, &(x, _)) in moves.iter().enumerate() {
        for j in 0..k {
            state.matched[i][j] = p.block_distance(x, r, j) == 0;
        }
    }
    if state.phase == Phase::Phase1 && (0..k).all(|i| state.matched[i][i]) {
        state.phase = Phase::Phase2_2;
    }
    state.actions = moves.iter().map(|m| m.1).collect();
    state.last_robber = Some(r);
    state.turns += 1;
    Ok(next)
}

/// [`CopStrategy`] adapter: `⌈n/w⌉` cops on `Γ_n`.
#[derive(Clone, Debug)]
pub struct BlockCopStrategy {
    state: CopStrategyState,
}

impl BlockCopStrategy {
    /// Checks that `g` is exactly `Γ_n` for `n = g.dimension()`.
    pub fn new(g: &LabeledGraph, width: usize) -> Result<Self> {
        let n = g.dimension();
        let name = format!("blocks{width}");
        let is_fib = g.has_genuine_labels()
            && g.labels().iter().all(|l| !l.has_adjacent_ones())
            && g.num_vertices() == fibonacci_strings(n).len();
        if !is_fib {
            return Err(Error::Incompatible {
                strategy: name,
                reason: "graph is not a Fibonacci cube".into(),
            });
        }
        Ok(BlockCopStrategy {
            state: CopStrategyState::new(n, width)?,
        })
    }

    pub fn with_trigger(mut self, rounds: usize) -> Self {
        self.state = self.state.with_trigger(rounds);
        self
    }

    pub fn state(&self) -> &CopStrategyState {
        &self.state
    }
}

impl CopStrategy for BlockCopStrategy {
    fn name(&self) -> String {
        format!("blocks{}", self.state.partition.width)
    }

    fn num_cops(&self) -> usize {
        self.state.num_cops()
    }

    fn place(&mut self, arena: &Arena<'_>, _rng: &mut ChaCha8Rng) -> Result<Vec<usize>> {
        let zero = arena
            .graph
            .vertex_of(&BitLabel::zeros(self.state.partition.n))
            .ok_or_else(|| Error::Precondition("0^n missing from the graph".into()))?;
        Ok(vec![zero; self.num_cops()])
    }

    fn step(&mut self, arena: &Arena<'_>, turn: &Turn<'_>, _rng: &mut ChaCha8Rng) -> Result<Vec<usize>> {
        let g = arena.graph;
        let last = turn
            .prev_robber
            .and_then(|p| self.state.partition.changed_block(g.label(p).bits(), g.label(turn.robber).bits()));
        block_cop_strategy_step(g, &mut self.state, turn.cops, turn.robber, last)
    }

    fn note(&self) -> String {
        let acts: Vec<&str> = self.state.actions.iter().map(CopAction::as_str).collect();
        match self.state.endgame {
            Some(l) => format!("phase={};endgame={};{}", self.state.phase, l, acts.join(",")),
            None => format!("phase={};{}", self.state.phase, acts.join(",")),
        }
    }
}
