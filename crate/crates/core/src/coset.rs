//! Todd-Coxeter coset enumeration, HLT strategy.
//!
//! Cosets are scanned in order of definition; for each live coset every
//! relator is traced and filled in, then any remaining undefined entries of
//! its row are defined. Coincidences are merged immediately through a
//! union-find forwarding array.

use std::collections::VecDeque;
use std::fmt;

use crate::error::CosetError;
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

pub const DEFAULT_MAX_COSETS: usize = 10_000;

const UNDEF: usize = usize::MAX;

/// Coset table with two columns per generator: `2g` for `g`, `2g+1` for `g^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    columns: usize,
    rows: Vec<Vec<usize>>,
    forward: Vec<usize>,
}

impl CosetTable {
    fn new(generators: usize) -> Self {
        CosetTable { columns: 2 * generators, rows: vec![vec![UNDEF; 2 * generators]], forward: vec![0] }
    }

    pub fn defined(&self) -> usize {
        self.rows.len()
    }

    pub fn is_live(&self, c: usize) -> bool {
        self.forward[c] == c
    }

    pub fn live_cosets(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rows.len()).filter(move |&c| self.is_live(c))
    }

    pub fn live_count(&self) -> usize {
        self.live_cosets().count()
    }

    /// Image of coset `c` under a letter, if defined.
    pub fn action(&self, c: usize, l: Letter) -> Option<usize> {
        let d = self.rows[c][l.column()];
        (d != UNDEF).then_some(d)
    }

    /// Image of coset `c` under a word, if every step is defined.
    pub fn trace(&self, c: usize, w: &Word) -> Option<usize> {
        w.letters().iter().try_fold(c, |c, &l| self.action(c, l))
    }

    /// Renumbers live cosets `0..n` in order; dead rows are dropped.
    fn compact(&self) -> CosetTable {
        let live: Vec<usize> = self.live_cosets().collect();
        let mut index = vec![UNDEF; self.rows.len()];
        for (i, &c) in live.iter().enumerate() {
            index[c] = i;
        }
        let rows = live
            .iter()
            .map(|&c| self.rows[c].iter().map(|&d| if d == UNDEF { UNDEF } else { index[d] }).collect())
            .collect();
        CosetTable { columns: self.columns, rows, forward: (0..live.len()).collect() }
    }

    fn is_closed(&self) -> bool {
        self.live_cosets().all(|c| self.rows[c].iter().all(|&d| d != UNDEF))
    }

    fn is_consistent(&self) -> bool {
        self.live_cosets().all(|c| {
            (0..self.columns).all(|x| {
                let d = self.rows[c][x];
                d == UNDEF || (self.is_live(d) && self.rows[d][x ^ 1] == c)
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationStatus {
    FiniteOrder(usize),
    Exceeded(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOutcome {
    pub status: EnumerationStatus,
    /// Compacted, closed table when the index is finite.
    pub table: Option<CosetTable>,
    /// Total cosets defined, including ones later identified.
    pub cosets_defined: usize,
}

impl EnumerationOutcome {
    pub fn order(&self) -> Option<usize> {
        match self.status {
            EnumerationStatus::FiniteOrder(n) => Some(n),
            EnumerationStatus::Exceeded(_) => None,
        }
    }
}

impl fmt::Display for EnumerationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationStatus::FiniteOrder(n) => write!(f, "order {n}"),
            EnumerationStatus::Exceeded(b) => write!(f, "exceeded {b}"),
        }
    }
}

struct Overflow;

struct Enumerator {
    table: CosetTable,
    max: usize,
    queue: VecDeque<usize>,
}

impl Enumerator {
    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.table.forward[root] != root {
            root = self.table.forward[root];
        }
        let mut k = c;
        while self.table.forward[k] != root {
            let next = self.table.forward[k];
            self.table.forward[k] = root;
            k = next;
        }
        root
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, Overflow> {
        if self.table.rows.len() >= self.max {
            return Err(Overflow);
        }
        let d = self.table.rows.len();
        self.table.rows.push(vec![UNDEF; self.table.columns]);
        self.table.forward.push(d);
        self.table.rows[c][x] = d;
        self.table.rows[d][x ^ 1] = c;
        Ok(d)
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (keep, kill) = (a.min(b), a.max(b));
            self.table.forward[kill] = keep;
            self.queue.push_back(kill);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(dead) = self.queue.pop_front() {
            for x in 0..self.table.columns {
                let d = self.table.rows[dead][x];
                if d == UNDEF {
                    continue;
                }
                self.table.rows[d][x ^ 1] = UNDEF;
                let mu = self.rep(dead);
                let nu = self.rep(d);
                if self.table.rows[mu][x] != UNDEF {
                    let target = self.table.rows[mu][x];
                    self.merge(nu, target);
                } else if self.table.rows[nu][x ^ 1] != UNDEF {
                    let target = self.table.rows[nu][x ^ 1];
                    self.merge(mu, target);
                } else {
                    self.table.rows[mu][x] = nu;
                    self.table.rows[nu][x ^ 1] = mu;
                }
            }
        }
    }

    /// Traces `w` from `c` forwards and backwards, defining cosets until the
    /// trace closes, then records the deduction or coincidence.
    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), Overflow> {
        let rows = |e: &Self, k: usize, x: usize| e.table.rows[k][x];
        let mut f = c;
        let mut b = c;
        let mut i: isize = 0;
        let mut j: isize = w.len() as isize - 1;
        loop {
            while i <= j && rows(self, f, w[i as usize]) != UNDEF {
                f = rows(self, f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && rows(self, b, w[j as usize] ^ 1) != UNDEF {
                b = rows(self, b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                // deduction
                let x = w[i as usize];
                self.table.rows[f][x] = b;
                self.table.rows[b][x ^ 1] = f;
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    fn run(&mut self, relators: &[Vec<usize>], subgroup: &[Vec<usize>]) -> Result<(), Overflow> {
        for w in subgroup {
            self.scan_and_fill(0, w)?;
        }
        let mut c = 0;
        while c < self.table.rows.len() {
            if self.table.is_live(c) {
                for r in relators {
                    self.scan_and_fill(c, r)?;
                    if !self.table.is_live(c) {
                        break;
                    }
                }
                if self.table.is_live(c) {
                    for x in 0..self.table.columns {
                        if self.table.rows[c][x] == UNDEF {
                            self.define(c, x)?;
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }
}

fn columns(w: &Word, n: usize) -> Result<Vec<usize>, CosetError> {
    w.letters()
        .iter()
        .map(|l| if l.generator < n { Ok(l.column()) } else { Err(CosetError::GeneratorOutOfRange(l.generator)) })
        .collect()
}

/// Enumerates the cosets of the subgroup generated by `subgroup` (the
/// trivial subgroup when empty), defining at most `max_cosets` cosets.
pub fn enumerate(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<EnumerationOutcome, CosetError> {
    if max_cosets == 0 {
        return Err(CosetError::ZeroBound);
    }
    let n = p.generator_count();
    let relators: Vec<Vec<usize>> = p.relators().iter().map(|r| columns(r, n)).collect::<Result<_, _>>()?;
    let subgroup_cols: Vec<Vec<usize>> = subgroup.iter().map(|w| columns(w, n)).collect::<Result<_, _>>()?;

    let mut e = Enumerator { table: CosetTable::new(n), max: max_cosets, queue: VecDeque::new() };
    let finished = e.run(&relators, &subgroup_cols).is_ok();
    let cosets_defined = e.table.defined();
    if !finished {
        return Ok(EnumerationOutcome {
            status: EnumerationStatus::Exceeded(max_cosets),
            table: None,
            cosets_defined,
        });
    }
    debug_assert!(e.table.is_consistent());
    let table = e.table.compact();
    if !replay(&table, p, subgroup) {
        return Err(CosetError::ReplayFailed);
    }
    Ok(EnumerationOutcome {
        status: EnumerationStatus::FiniteOrder(table.live_count()),
        table: Some(table),
        cosets_defined,
    })
}

/// Checks that a table is closed and consistent, every relator fixes every
/// coset and every subgroup word fixes coset 0.
pub fn replay(table: &CosetTable, p: &Presentation, subgroup: &[Word]) -> bool {
    table.is_closed()
        && table.is_consistent()
        && table.live_cosets().all(|c| p.relators().iter().all(|r| table.trace(c, r) == Some(c)))
        && subgroup.iter().all(|w| table.trace(0, w) == Some(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Triviality {
    /// A closed coset table with one coset: the group is trivial.
    Trivial,
    /// No proof of triviality; `order` is the group order when enumeration
    /// finished, which is then a proof of non-triviality.
    Inconclusive { order: Option<usize> },
}

impl Triviality {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Triviality::Trivial)
    }
}

impl fmt::Display for Triviality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Triviality::Trivial => f.write_str("trivial"),
            Triviality::Inconclusive { order: Some(n) } => write!(f, "inconclusive (order {n})"),
            Triviality::Inconclusive { order: None } => f.write_str("inconclusive"),
        }
    }
}

/// Simplifies `p` and enumerates cosets of the trivial subgroup.
pub fn certify_trivial(p: &Presentation, max_cosets: usize) -> Result<Triviality, CosetError> {
    let simplified = p.simplify();
    let outcome = enumerate(&simplified, &[], max_cosets)?;
    Ok(match outcome.order() {
        Some(1) => Triviality::Trivial,
        order => Triviality::Inconclusive { order },
    })
}
