//! Dense linear algebra over GF(2) for dimensions up to 64.
//!
//! A matrix is a slice of row bit masks; `rows[i]` is the image of `e_i`
//! under the map `v -> v * M` (row-vector convention).

/// Kernel of `v -> v * M`, as a reduced basis.
pub fn kernel(rows: &[u64], dim: u32) -> Vec<u64> {
    // Row-reduce [M | I]; rows whose M part vanishes give kernel vectors.
    let n = rows.len();
    let mut aug: Vec<(u64, u64)> = rows.iter().enumerate().map(|(i, &r)| (r, 1u64 << i)).collect();
    let mut pivot_row = 0;
    for col in 0..dim {
        let bit = 1u64 << col;
        let Some(p) = (pivot_row..n).find(|&i| aug[i].0 & bit != 0) else { continue };
        aug.swap(pivot_row, p);
        let (pr, pi) = aug[pivot_row];
        for (i, row) in aug.iter_mut().enumerate() {
            if i != pivot_row && row.0 & bit != 0 {
                row.0 ^= pr;
                row.1 ^= pi;
            }
        }
        pivot_row += 1;
    }
    let mut basis: Vec<u64> = aug[pivot_row..].iter().map(|&(_, v)| v).collect();
    reduce_basis(&mut basis);
    basis
}

/// Rank of a set of row vectors.
pub fn rank(rows: &[u64]) -> u32 {
    let mut basis = rows.to_vec();
    reduce_basis(&mut basis);
    basis.len() as u32
}

/// Replaces `vs` by a reduced echelon basis of its span, sorted ascending.
pub fn reduce_basis(vs: &mut Vec<u64>) {
    let mut out: Vec<u64> = Vec::new();
    for &v in vs.iter() {
        let mut v = v;
        for &b in &out {
            let lead = 63 - b.leading_zeros();
            if (v >> lead) & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            let lead = 63 - v.leading_zeros();
            for b in out.iter_mut() {
                if (*b >> lead) & 1 == 1 {
                    *b ^= v;
                }
            }
            out.push(v);
        }
    }
    out.sort_unstable();
    *vs = out;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_singular_matrix() {
        // e0 -> 0b11, e1 -> 0b11, e2 -> 0b100
        let k = kernel(&[0b11, 0b11, 0b100], 3);
        assert_eq!(k, vec![0b11]);
        assert_eq!(rank(&[0b11, 0b11, 0b100]), 2);
    }
}
