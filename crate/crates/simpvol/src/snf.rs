//! Smith normal form of sparse integer matrices, used for homology.
//!
//! Strategy: eliminate with ±1 pivots while the matrix stays sparse,
//! then fall back to a dense big-integer reduction for whatever is
//! left. The returned data are the rank and the elementary divisors
//! that differ from 1.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer matrix in row-major form.
pub struct SparseMat {
    pub cols: usize,
    entries: Vec<HashMap<usize, i64>>,
}

impl SparseMat {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMat {
            cols,
            entries: vec![HashMap::new(); rows],
        }
    }

    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        if v == 0 {
            return;
        }
        let e = self.entries[r].entry(c).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries[r].remove(&c);
        }
    }
}

/// Rank and nontrivial elementary divisors.
pub struct SmithResult {
    pub rank: usize,
    pub divisors: Vec<BigInt>,
}

pub fn smith_normal_form(mat: SparseMat) -> SmithResult {
    let mut rows: Vec<BTreeMap<usize, i64>> = mat
        .entries
        .into_iter()
        .map(|r| r.into_iter().collect())
        .collect();
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); mat.cols];
    for (ri, row) in rows.iter().enumerate() {
        for (&c, _) in row {
            col_rows[c].push(ri);
        }
    }
    let mut row_alive = vec![true; rows.len()];
    let mut col_alive = vec![true; mat.cols];
    let mut rank = 0usize;

    // unit-pivot phase
    loop {
        let mut pivot: Option<(usize, usize)> = None;
        let mut best = usize::MAX;
        'search: for (ri, row) in rows.iter().enumerate() {
            if !row_alive[ri] || row.is_empty() {
                continue;
            }
            for (&c, &v) in row {
                if col_alive[c] && (v == 1 || v == -1) {
                    let cost = row.len();
                    if cost < best {
                        best = cost;
                        pivot = Some((ri, c));
                        if cost <= 2 {
                            break 'search;
                        }
                    }
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        let pv = rows[pr][&pc];
        let pivot_row: Vec<(usize, i64)> = rows[pr]
            .iter()
            .filter(|&(&c, _)| col_alive[c])
            .map(|(&c, &v)| (c, v))
            .collect();
        let touched: Vec<usize> = col_rows[pc]
            .iter()
            .copied()
            .filter(|&r| r != pr && row_alive[r] && rows[r].contains_key(&pc))
            .collect();
        for r in touched {
            // col_rows may hold stale duplicates; re-check the entry
            let Some(&coef) = rows[r].get(&pc) else { continue };
            let factor = coef * pv; // pv is ±1, so this is v / pv
            for &(c, v) in &pivot_row {
                let e = rows[r].entry(c).or_insert(0);
                let had = *e != 0;
                *e -= factor * v;
                if *e == 0 {
                    rows[r].remove(&c);
                } else if !had {
                    col_rows[c].push(r);
                }
            }
        }
        row_alive[pr] = false;
        col_alive[pc] = false;
        rank += 1;
    }

    // dense phase on the residual block
    let live_cols: Vec<usize> = (0..mat.cols).filter(|&c| col_alive[c]).collect();
    let col_pos: HashMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense: Vec<Vec<BigInt>> = Vec::new();
    for (ri, row) in rows.iter().enumerate() {
        if !row_alive[ri] {
            continue;
        }
        let mut drow = vec![BigInt::zero(); live_cols.len()];
        let mut nonzero = false;
        for (&c, &v) in row {
            if let Some(&p) = col_pos.get(&c) {
                if v != 0 {
                    drow[p] = BigInt::from(v);
                    nonzero = true;
                }
            }
        }
        if nonzero {
            dense.push(drow);
        }
    }
    let divisors = dense_smith(&mut dense);
    SmithResult {
        rank: rank + divisors.len(),
        divisors: divisors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Full Smith reduction of a dense matrix; returns all nonzero
/// diagonal entries (made positive), in divisibility order.
fn dense_smith(m: &mut Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut top = 0usize;
    while top < rows && top < cols {
        // find smallest nonzero entry in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in top..cols {
                if !m[r][c].is_zero() {
                    let better = match &pivot {
                        None => true,
                        Some((pr, pc)) => m[r][c].abs() < m[*pr][*pc].abs(),
                    };
                    if better {
                        pivot = Some((r, c));
                    }
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        m.swap(top, pr);
        for row in m.iter_mut() {
            row.swap(top, pc);
        }
        loop {
            let mut clean = true;
            for r in top + 1..rows {
                if m[r][top].is_zero() {
                    continue;
                }
                let q = div_round(&m[r][top], &m[top][top]);
                if !q.is_zero() {
                    for c in top..cols {
                        let sub = &q * &m[top][c];
                        m[r][c] -= sub;
                    }
                }
                if !m[r][top].is_zero() {
                    m.swap(top, r);
                    clean = false;
                }
            }
            for c in top + 1..cols {
                if m[top][c].is_zero() {
                    continue;
                }
                let q = div_round(&m[top][c], &m[top][top]);
                if !q.is_zero() {
                    for row in m.iter_mut().take(rows).skip(top) {
                        let sub = &q * &row[top];
                        row[c] -= sub;
                    }
                }
                if !m[top][c].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(top, c);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        diag.push(m[top][top].abs());
        top += 1;
    }
    // enforce divisibility chain
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..diag.len().saturating_sub(1) {
            if !(&diag[i + 1] % &diag[i]).is_zero() {
                let g = diag[i].gcd(&diag[i + 1]);
                let l = (&diag[i] * &diag[i + 1]) / &g;
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
    }
    diag
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // quotient minimizing |a - q b|
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if r.sign() == b.sign() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}
