//! Gaussian elimination over the prime field GF(p).

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Rank over GF(p) of a matrix given as rows of residues.
pub fn rank_mod_p(rows: &[Vec<u32>], p: u32) -> usize {
    let mut a: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v % p).collect())
        .collect();
    let cols = a.iter().map(|r| r.len()).max().unwrap_or(0);
    for r in &mut a {
        r.resize(cols, 0);
    }
    let p64 = p as u64;
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = inv_mod(a[rank][col], p) as u64;
        for v in a[rank].iter_mut() {
            *v = (*v as u64 * inv % p64) as u32;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col] as u64;
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                *v = ((*v as u64 + (p64 - factor) * pv as u64) % p64) as u32;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_mod_p(&[], 3), 0);
        assert_eq!(rank_mod_p(&[vec![0, 0], vec![0, 0]], 2), 0);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4]], 5), 1);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4]], 3), 1);
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 2]], 3), 2);
        assert_eq!(rank_mod_p(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 2), 2);
        assert_eq!(rank_mod_p(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 3), 3);
    }
}
