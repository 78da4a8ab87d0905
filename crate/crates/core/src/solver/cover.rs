//! Exact cover by dancing links, with memoized dead ends.
//!
//! Columns are poset elements, rows are candidate intervals. The column with
//! the fewest remaining rows is branched on first (ties go to the lowest
//! index). A branch's remaining subproblem is determined by the set of covered
//! columns, so failed sets are cached and never re-explored.

use std::collections::HashSet;

use crate::par::{find_map, Parallelism};

/// Recursion depth up to which branches are explored concurrently.
const PAR_DEPTH: usize = 2;

/// Budget for cached dead ends, in 64-bit words.
const MEMO_WORDS: usize = 1 << 22;

#[derive(Clone)]
pub(crate) struct ExactCover {
    left: Vec<u32>,
    right: Vec<u32>,
    up: Vec<u32>,
    down: Vec<u32>,
    col: Vec<u32>,
    row_of: Vec<u32>,
    size: Vec<u32>,
    covered: Vec<u64>,
}

struct Memo {
    dead: HashSet<Vec<u64>>,
    words: usize,
}

impl Memo {
    fn new() -> Self {
        Memo {
            dead: HashSet::new(),
            words: 0,
        }
    }

    fn insert(&mut self, key: &[u64]) {
        if self.words + key.len() <= MEMO_WORDS {
            self.words += key.len();
            self.dead.insert(key.to_vec());
        }
    }
}

impl ExactCover {
    /// `rows[r]` lists the columns covered by row `r` (distinct, each `< ncols`).
    pub(crate) fn new(ncols: usize, rows: &[Vec<u32>]) -> Self {
        let headers = ncols + 1;
        let total = headers + rows.iter().map(Vec::len).sum::<usize>();
        let mut dl = ExactCover {
            left: Vec::with_capacity(total),
            right: Vec::with_capacity(total),
            up: Vec::with_capacity(total),
            down: Vec::with_capacity(total),
            col: Vec::with_capacity(total),
            row_of: Vec::with_capacity(total),
            size: vec![0; headers],
            covered: vec![0; ncols.div_ceil(64)],
        };
        // node 0 is the root, node c + 1 is the header of column c
        for h in 0..headers as u32 {
            dl.left.push(if h == 0 { ncols as u32 } else { h - 1 });
            dl.right.push(if h as usize == ncols { 0 } else { h + 1 });
            dl.up.push(h);
            dl.down.push(h);
            dl.col.push(h);
            dl.row_of.push(u32::MAX);
        }
        for (r, cols) in rows.iter().enumerate() {
            let first = dl.col.len() as u32;
            for (k, &c) in cols.iter().enumerate() {
                let node = dl.col.len() as u32;
                let h = c + 1;
                let last = dl.up[h as usize];
                dl.up.push(last);
                dl.down.push(h);
                dl.down[last as usize] = node;
                dl.up[h as usize] = node;
                dl.col.push(h);
                dl.row_of.push(r as u32);
                dl.left.push(if k == 0 { node } else { node - 1 });
                dl.right.push(first);
                if k > 0 {
                    dl.right[node as usize - 1] = node;
                }
                dl.left[first as usize] = node;
                dl.size[h as usize] += 1;
            }
        }
        dl
    }

    fn cover(&mut self, h: u32) {
        let h = h as usize;
        let (l, r) = (self.left[h], self.right[h]);
        self.right[l as usize] = r;
        self.left[r as usize] = l;
        let c = h - 1;
        self.covered[c / 64] |= 1 << (c % 64);
        let mut i = self.down[h] as usize;
        while i != h {
            let mut j = self.right[i] as usize;
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u as usize] = d;
                self.up[d as usize] = u;
                self.size[self.col[j] as usize] -= 1;
                j = self.right[j] as usize;
            }
            i = self.down[i] as usize;
        }
    }

    fn uncover(&mut self, h: u32) {
        let h = h as usize;
        let mut i = self.up[h] as usize;
        while i != h {
            let mut j = self.left[i] as usize;
            while j != i {
                self.size[self.col[j] as usize] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u as usize] = j as u32;
                self.up[d as usize] = j as u32;
                j = self.left[j] as usize;
            }
            i = self.up[i] as usize;
        }
        let c = h - 1;
        self.covered[c / 64] &= !(1 << (c % 64));
        let (l, r) = (self.left[h], self.right[h]);
        self.right[l as usize] = h as u32;
        self.left[r as usize] = h as u32;
    }

    /// Remaining column with fewest rows, or `None` when all are covered.
    fn choose(&self) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        let mut h = self.right[0];
        while h != 0 {
            let s = self.size[h as usize];
            if best.is_none_or(|(_, bs)| s < bs) {
                best = Some((h, s));
                if s <= 1 {
                    break;
                }
            }
            h = self.right[h as usize];
        }
        best.map(|(h, _)| h)
    }

    /// Cover every other column of the row containing `node`.
    fn select(&mut self, node: u32) {
        let mut j = self.right[node as usize];
        while j != node {
            self.cover(self.col[j as usize]);
            j = self.right[j as usize];
        }
    }

    fn deselect(&mut self, node: u32) {
        let mut j = self.left[node as usize];
        while j != node {
            self.uncover(self.col[j as usize]);
            j = self.left[j as usize];
        }
    }

    fn search_seq(&mut self, solution: &mut Vec<u32>, memo: &mut Memo) -> bool {
        let Some(h) = self.choose() else {
            return true;
        };
        if self.size[h as usize] == 0 || memo.dead.contains(&self.covered) {
            return false;
        }
        let key = self.covered.clone();
        self.cover(h);
        let mut r = self.down[h as usize];
        while r != h {
            solution.push(self.row_of[r as usize]);
            self.select(r);
            if self.search_seq(solution, memo) {
                return true;
            }
            self.deselect(r);
            solution.pop();
            r = self.down[r as usize];
        }
        self.uncover(h);
        memo.insert(&key);
        false
    }

    fn search_par(mut self, depth: usize, par: Parallelism) -> Option<Vec<u32>> {
        if depth >= PAR_DEPTH || !par.is_parallel() {
            let mut solution = Vec::new();
            return self
                .search_seq(&mut solution, &mut Memo::new())
                .then_some(solution);
        }
        let h = match self.choose() {
            None => return Some(Vec::new()),
            Some(h) if self.size[h as usize] == 0 => return None,
            Some(h) => h,
        };
        let mut nodes = Vec::new();
        let mut r = self.down[h as usize];
        while r != h {
            nodes.push(r);
            r = self.down[r as usize];
        }
        self.cover(h);
        let base = self;
        find_map(par, &nodes, |&node| {
            let mut branch = base.clone();
            branch.select(node);
            let mut rest = branch.search_par(depth + 1, par)?;
            rest.push(base.row_of[node as usize]);
            Some(rest)
        })
    }

    /// Row indices of some exact cover, or `None`.
    pub(crate) fn solve(self, par: Parallelism) -> Option<Vec<u32>> {
        let mut rows = self.search_par(0, par)?;
        rows.sort_unstable();
        Some(rows)
    }
}
