//! Integral homology of the realization.
//!
//! Face classes of a pseudomanifold need not carry well-defined
//! boundary signs (a face may be identified with itself through an
//! orientation-reversing chain of gluings), so the chain complex is
//! built on the first barycentric subdivision instead: cells are flags
//! of strictly nested nonempty vertex subsets of a simplex, modulo the
//! gluing-induced identifications. Flags have one vertex per nesting
//! level, so self-identifications are trivial and the alternating-sum
//! boundary is globally consistent.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::dsu::Dsu;
use crate::snf::{smith_normal_form, SparseMat};

use super::Pseudomanifold;

/// One homology group: free rank plus torsion coefficients in
/// divisibility order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

fn enumerate_chains(full: u32) -> Vec<Vec<u32>> {
    // all strictly nested chains of nonempty subsets of `full`
    let mut chains: Vec<Vec<u32>> = Vec::new();
    let subsets: Vec<u32> = (1..=full).filter(|s| s & full == *s).collect();
    for &top in &subsets {
        extend_down(top, &mut vec![top], &mut chains);
    }
    chains
}

fn extend_down(top: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    out.push(prefix.clone());
    // proper nonempty subsets of `top` to prepend below it
    let mut sub = (top - 1) & top;
    while sub != 0 {
        prefix.insert(0, sub);
        extend_down(sub, prefix, out);
        prefix.remove(0);
        sub = (sub - 1) & top;
    }
}

fn map_mask(mask: u32, map: &[usize]) -> u32 {
    let mut out = 0u32;
    let mut bits = mask;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        out |= 1 << map[v];
        bits &= bits - 1;
    }
    out
}

impl Pseudomanifold {
    /// All homology groups `H_0, …, H_n` of the realization, with
    /// integer coefficients.
    pub fn homology_all(&self) -> Vec<HomologyGroup> {
        let n = self.dimension;
        let full: u32 = (1u32 << (n + 1)) - 1;
        let chains = enumerate_chains(full);
        let per_simplex = chains.len();
        let chain_id: HashMap<&[u32], usize> = chains
            .iter()
            .enumerate()
            .map(|(k, c)| (c.as_slice(), k))
            .collect();

        let mut dsu = Dsu::new(self.simplex_count * per_simplex);
        let mut mapped = Vec::new();
        for g in &self.gluings {
            let face_mask = full & !(1 << g.a.1);
            for (k, chain) in chains.iter().enumerate() {
                if chain.last().unwrap() & face_mask != *chain.last().unwrap() {
                    continue;
                }
                mapped.clear();
                mapped.extend(chain.iter().map(|&s| map_mask(s, &g.map)));
                let k2 = chain_id[mapped.as_slice()];
                dsu.union(g.a.0 * per_simplex + k, g.b.0 * per_simplex + k2);
            }
        }

        // number cells per dimension, remembering one representative flag
        let mut cell_of = vec![usize::MAX; self.simplex_count * per_simplex];
        let mut cells_by_dim: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
        let mut root_cell: HashMap<usize, usize> = HashMap::new();
        for i in 0..self.simplex_count {
            for (k, chain) in chains.iter().enumerate() {
                let idx = i * per_simplex + k;
                let root = dsu.find(idx);
                let d = chain.len() - 1;
                let cell = *root_cell.entry(root).or_insert_with(|| {
                    cells_by_dim[d].push((i, k));
                    cells_by_dim[d].len() - 1
                });
                cell_of[idx] = cell;
            }
        }

        // boundary matrices and their ranks/divisors
        let mut results = Vec::new();
        for d in 1..=n {
            let rows = cells_by_dim[d - 1].len();
            let cols = cells_by_dim[d].len();
            let mut mat = SparseMat::new(rows, cols);
            for (col, &(i, k)) in cells_by_dim[d].iter().enumerate() {
                let chain = &chains[k];
                for drop in 0..chain.len() {
                    let mut face: Vec<u32> = chain.clone();
                    face.remove(drop);
                    let fk = chain_id[face.as_slice()];
                    let row = cell_of[i * per_simplex + fk];
                    let sign = if drop % 2 == 0 { 1 } else { -1 };
                    mat.add(row, col, sign);
                }
            }
            results.push(smith_normal_form(mat));
        }

        let mut groups = Vec::new();
        for d in 0..=n {
            let rank_d = if d == 0 { 0 } else { results[d - 1].rank };
            let (rank_d1, torsion) = if d < n {
                (results[d].rank, results[d].divisors.clone())
            } else {
                (0, Vec::new())
            };
            groups.push(HomologyGroup {
                betti: cells_by_dim[d].len() - rank_d - rank_d1,
                torsion,
            });
        }
        groups
    }

    /// Homology in a single degree; zero group above the dimension.
    pub fn homology(&self, d: usize) -> HomologyGroup {
        if d > self.dimension {
            return HomologyGroup {
                betti: 0,
                torsion: Vec::new(),
            };
        }
        self.homology_all().into_iter().nth(d).unwrap()
    }
}
