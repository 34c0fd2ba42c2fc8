//! Todd–Coxeter coset enumeration.
//!
//! Two definition strategies share one table and one coincidence routine:
//! HLT (scan every relator at every coset, filling gaps with new cosets, with
//! a lookahead pass when the table fills up) and Felsch (define the first
//! empty entry, then scan every relator cycle through each new entry).

use super::presentation::Presentation;
use super::word::{inverse_word, Letter, Word};
use super::FpError;

const NONE: u32 = u32::MAX;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    #[default]
    Hlt,
    Felsch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub strategy: Strategy,
    /// Bound on simultaneously live cosets.
    pub max_cosets: usize,
    /// Eliminate generators through relators of length one and two before
    /// enumerating (see [`super::simplify`]).
    pub simplify: bool,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            strategy: Strategy::Hlt,
            max_cosets: DEFAULT_MAX_COSETS,
            simplify: true,
        }
    }
}

impl EnumerationConfig {
    pub fn with_max_cosets(mut self, max_cosets: usize) -> Self {
        self.max_cosets = max_cosets;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_simplify(mut self, simplify: bool) -> Self {
        self.simplify = simplify;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub definitions: usize,
    pub max_live: usize,
    pub lookaheads: usize,
}

/// A closed, compressed and standardized coset table. Coset 0 is the
/// subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    num_generators: usize,
    num_cosets: usize,
    table: Vec<u32>,
    stats: EnumerationStats,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.num_cosets
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn stats(&self) -> &EnumerationStats {
        &self.stats
    }

    /// Image of `coset` under a letter, if defined.
    #[inline]
    pub fn act(&self, coset: usize, letter: Letter) -> Option<usize> {
        let v = self.table[coset * 2 * self.num_generators + letter.column()];
        (v != NONE).then_some(v as usize)
    }

    pub fn trace(&self, coset: usize, word: &[Letter]) -> Option<usize> {
        word.iter().try_fold(coset, |c, &l| self.act(c, l))
    }

    pub fn is_closed(&self) -> bool {
        !self.table.contains(&NONE)
    }

    /// True when every relator traces back to its start from every coset.
    pub fn satisfies(&self, relators: &[Word]) -> bool {
        (0..self.num_cosets).all(|c| relators.iter().all(|r| self.trace(c, r) == Some(c)))
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_words` in the
/// group presented by `p`.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_words: &[Word],
    config: &EnumerationConfig,
) -> Result<CosetTable, FpError> {
    p.validate()?;
    let pre = p.preprocessed();
    let subgroup: Vec<Word> = subgroup_words
        .iter()
        .map(|w| super::word::free_reduce(w))
        .filter(|w| !w.is_empty())
        .collect();
    if let Some(l) = subgroup.iter().flatten().find(|l| l.generator() >= p.num_generators) {
        return Err(FpError::GeneratorOutOfRange {
            relator: usize::MAX,
            generator: l.generator(),
            num_generators: p.num_generators,
        });
    }
    let mut e = Enumerator::new(pre.num_generators, &pre.relators, config.max_cosets.max(1));
    match config.strategy {
        Strategy::Hlt => e.run_hlt(&subgroup)?,
        Strategy::Felsch => e.run_felsch(&subgroup)?,
    }
    let table = e.finish();
    if !table.satisfies(&pre.relators) || !subgroup.iter().all(|w| table.trace(0, w) == Some(0)) {
        return Err(FpError::Internal("enumerated table fails a relator".into()));
    }
    Ok(table)
}

#[derive(Debug)]
struct Full;

struct Enumerator<'a> {
    ngens: usize,
    width: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    live: usize,
    max_cosets: usize,
    relators: &'a [Word],
    /// Columns whose generator is killed by a length-one relator; every new
    /// coset gets loops there.
    loops: Vec<usize>,
    queue: Vec<u32>,
    deductions: Vec<(u32, u32)>,
    track_deductions: bool,
    /// Felsch only: cyclic conjugates of relators and their inverses, indexed
    /// by first letter.
    by_first: Vec<Vec<Word>>,
    stats: EnumerationStats,
}

impl<'a> Enumerator<'a> {
    fn new(ngens: usize, relators: &'a [Word], max_cosets: usize) -> Self {
        let mut loops = Vec::new();
        for r in relators.iter().filter(|r| r.len() == 1) {
            loops.push(r[0].column());
            loops.push(r[0].inverse().column());
        }
        loops.sort_unstable();
        loops.dedup();
        let mut e = Enumerator {
            ngens,
            width: 2 * ngens,
            table: Vec::new(),
            forward: Vec::new(),
            live: 0,
            max_cosets,
            relators,
            loops,
            queue: Vec::new(),
            deductions: Vec::new(),
            track_deductions: false,
            by_first: Vec::new(),
            stats: EnumerationStats::default(),
        };
        e.new_row();
        e
    }

    fn new_row(&mut self) -> u32 {
        let n = self.forward.len() as u32;
        self.table.extend(std::iter::repeat_n(NONE, self.width));
        self.forward.push(n);
        self.live += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        for i in 0..self.loops.len() {
            let col = self.loops[i];
            self.table[n as usize * self.width + col] = n;
            if self.track_deductions {
                self.deductions.push((n, col as u32));
            }
        }
        n
    }

    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.width + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.table[c as usize * self.width + col] = v;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, col: usize) -> Result<u32, Full> {
        if self.live >= self.max_cosets {
            return Err(Full);
        }
        let n = self.new_row();
        self.stats.definitions += 1;
        self.set(c, col, n);
        self.set(n, col ^ 1, c);
        if self.track_deductions {
            self.deductions.push((c, col as u32));
        }
        Ok(n)
    }

    fn deduce(&mut self, a: u32, col: usize, b: u32) {
        self.set(a, col, b);
        self.set(b, col ^ 1, a);
        if self.track_deductions {
            self.deductions.push((a, col as u32));
        }
    }

    /// Scans `w` from `c`, defining new cosets while the gap is longer than
    /// one letter.
    fn scan_and_fill(&mut self, c: u32, w: &[Letter]) -> Result<(), Full> {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len();
        loop {
            while i < j {
                let next = self.get(f, w[i].column());
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let prev = self.get(b, w[j - 1].inverse().column());
                if prev == NONE {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.deduce(f, w[i].column(), b);
                return Ok(());
            }
            self.define(f, w[i].column())?;
        }
    }

    /// Scans `w` from `c` without defining anything; records a deduction or
    /// coincidence when the scan closes.
    fn scan(&mut self, c: u32, w: &[Letter]) {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len();
        while i < j {
            let next = self.get(f, w[i].column());
            if next == NONE {
                break;
            }
            f = next;
            i += 1;
        }
        if i == j {
            if f != b {
                self.coincidence(f, b);
            }
            return;
        }
        while j > i {
            let prev = self.get(b, w[j - 1].inverse().column());
            if prev == NONE {
                break;
            }
            b = prev;
            j -= 1;
        }
        if j == i {
            self.coincidence(f, b);
        } else if j == i + 1 {
            self.deduce(f, w[i].column(), b);
        }
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        let mut x = c;
        while self.forward[x as usize] != root {
            let next = self.forward[x as usize];
            self.forward[x as usize] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.forward[hi as usize] = lo;
        self.live -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut qi = 0;
        while qi < self.queue.len() {
            let g = self.queue[qi];
            qi += 1;
            for col in 0..self.width {
                let d = self.get(g, col);
                if d == NONE {
                    continue;
                }
                self.set(d, col ^ 1, NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mu_x = self.get(mu, col);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                } else {
                    let nu_xi = self.get(nu, col ^ 1);
                    if nu_xi != NONE {
                        self.merge(mu, nu_xi);
                    } else {
                        self.deduce(mu, col, nu);
                    }
                }
            }
        }
        self.queue.clear();
    }

    fn lookahead(&mut self) {
        self.stats.lookaheads += 1;
        let relators = self.relators;
        let mut c = 0;
        while c < self.forward.len() as u32 {
            for r in relators {
                if !self.is_live(c) {
                    break;
                }
                self.scan(c, r);
            }
            c += 1;
        }
    }

    /// Drops dead rows, keeping live cosets in their relative order. Returns
    /// the new index of the first live coset at or after `keep`.
    fn compress(&mut self, keep: u32) -> u32 {
        let n = self.forward.len();
        let mut new_index = vec![NONE; n];
        let mut count = 0u32;
        let mut keep_new = None;
        for c in 0..n as u32 {
            if c >= keep && keep_new.is_none() && self.is_live(c) {
                keep_new = Some(count);
            }
            if self.is_live(c) {
                new_index[c as usize] = count;
                count += 1;
            }
        }
        let mut table = Vec::with_capacity(count as usize * self.width);
        for c in 0..n as u32 {
            if !self.is_live(c) {
                continue;
            }
            for col in 0..self.width {
                let v = self.get(c, col);
                table.push(if v == NONE { NONE } else { new_index[v as usize] });
            }
        }
        self.table = table;
        self.forward = (0..count).collect();
        self.live = count as usize;
        keep_new.unwrap_or(count)
    }

    fn recover(&mut self, at: u32) -> Result<u32, FpError> {
        self.lookahead();
        if self.track_deductions {
            self.process_deductions();
        }
        if self.live >= self.max_cosets {
            return Err(FpError::CosetLimitExceeded {
                max_cosets: self.max_cosets,
            });
        }
        Ok(self.compress(at))
    }

    fn run_hlt(&mut self, subgroup: &[Word]) -> Result<(), FpError> {
        for w in subgroup {
            while self.scan_and_fill(0, w).is_err() {
                self.recover(0)?;
            }
        }
        let relators = self.relators;
        let mut c = 0u32;
        while (c as usize) < self.forward.len() {
            if !self.is_live(c) {
                c += 1;
                continue;
            }
            let mut outcome = Ok(());
            for r in relators {
                if !self.is_live(c) {
                    break;
                }
                outcome = self.scan_and_fill(c, r);
                if outcome.is_err() {
                    break;
                }
            }
            if outcome.is_ok() && self.is_live(c) {
                for col in 0..self.width {
                    if self.get(c, col) == NONE {
                        if let Err(e) = self.define(c, col) {
                            outcome = Err(e);
                            break;
                        }
                    }
                }
            }
            match outcome {
                Ok(()) => c += 1,
                Err(Full) => c = self.recover(c)?,
            }
        }
        Ok(())
    }

    fn run_felsch(&mut self, subgroup: &[Word]) -> Result<(), FpError> {
        self.track_deductions = true;
        let mut by_first: Vec<Vec<Word>> = vec![Vec::new(); self.width];
        for r in self.relators {
            let inv = inverse_word(r);
            for base in [r, &inv] {
                for k in 0..base.len() {
                    let rot: Word = base[k..].iter().chain(&base[..k]).copied().collect();
                    if !by_first[rot[0].column()].contains(&rot) {
                        by_first[rot[0].column()].push(rot);
                    }
                }
            }
        }
        self.by_first = by_first;
        for w in subgroup {
            while self.scan_and_fill(0, w).is_err() {
                self.recover(0)?;
            }
        }
        self.process_deductions();
        // Relators at the subgroup coset.
        let relators = self.relators;
        for r in relators {
            self.scan(0, r);
        }
        self.process_deductions();

        let mut c = 0u32;
        while (c as usize) < self.forward.len() {
            if !self.is_live(c) {
                c += 1;
                continue;
            }
            let mut full = false;
            for col in 0..self.width {
                if !self.is_live(c) {
                    break;
                }
                if self.get(c, col) == NONE {
                    if self.define(c, col).is_err() {
                        full = true;
                        break;
                    }
                    self.process_deductions();
                }
            }
            if full {
                c = self.recover(c)?;
                continue;
            }
            c += 1;
        }
        Ok(())
    }

    fn process_deductions(&mut self) {
        let by_first = std::mem::take(&mut self.by_first);
        while let Some((d, col)) = self.deductions.pop() {
            if !self.is_live(d) {
                continue;
            }
            for w in &by_first[col as usize] {
                if !self.is_live(d) {
                    break;
                }
                self.scan(d, w);
            }
        }
        self.by_first = by_first;
    }

    /// Compresses and standardizes: cosets are renumbered in the order they
    /// are first reached from coset 0, scanning columns left to right.
    fn finish(mut self) -> CosetTable {
        self.compress(0);
        let n = self.forward.len();
        let mut order = vec![0u32];
        let mut new_index = vec![NONE; n];
        new_index[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            i += 1;
            for col in 0..self.width {
                let d = self.get(c, col);
                if d != NONE && new_index[d as usize] == NONE {
                    new_index[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
        }
        let mut table = Vec::with_capacity(order.len() * self.width);
        for &c in &order {
            for col in 0..self.width {
                let v = self.get(c, col);
                table.push(if v == NONE { NONE } else { new_index[v as usize] });
            }
        }
        CosetTable {
            num_generators: self.ngens,
            num_cosets: order.len(),
            table,
            stats: self.stats,
        }
    }
}
