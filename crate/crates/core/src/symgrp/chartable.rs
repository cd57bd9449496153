//! Symmetric group character tables by the Murnaghan–Nakayama rule,
//! with orthogonality checks and a brute-force standard-tableau oracle.

use super::partition::{factorial, partitions, Partition};
use num::{BigInt, BigRational, One, Zero};

/// Border-strip recursion on first-column hook lengths (beta numbers):
/// removing a strip of length r replaces a beta value b by b - r, with
/// sign (-1)^(number of beta values jumped over).
fn mn_char(lambda: &Partition, rho: &[usize]) -> BigInt {
    if rho.is_empty() {
        return BigInt::one();
    }
    let r = rho[0] as i64;
    let l = lambda.len();
    let beta: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(k, &p)| p as i64 + (l - 1 - k) as i64)
        .collect();
    let mut acc = BigInt::zero();
    for (k, &b) in beta.iter().enumerate() {
        let nb = b - r;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|&&x| nb < x && x < b).count();
        let mut nbeta = beta.clone();
        nbeta[k] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let nl = nbeta.len();
        let parts: Vec<usize> = nbeta
            .iter()
            .enumerate()
            .map(|(m, &x)| (x - (nl - 1 - m) as i64) as usize)
            .collect();
        let sub = mn_char(&Partition::new(parts), &rho[1..]);
        if height % 2 == 0 {
            acc += sub;
        } else {
            acc -= sub;
        }
    }
    acc
}

pub struct CharacterTable {
    pub n: usize,
    /// Row and column labels: partitions of n in the fixed order.
    pub parts: Vec<Partition>,
    /// values[row irreducible][column cycle type]
    pub values: Vec<Vec<BigInt>>,
    pub class_sizes: Vec<BigInt>,
}

pub fn class_size(n: usize, rho: &Partition) -> BigInt {
    // n! / z_rho with z_rho = prod(parts) * prod(mult_m!)
    let mut z = 1usize;
    let mut mult = std::collections::BTreeMap::new();
    for &p in rho.parts() {
        z *= p;
        *mult.entry(p).or_insert(0usize) += 1;
    }
    for (_, m) in mult {
        z *= factorial(m);
    }
    BigInt::from(factorial(n) / z)
}

pub fn character_table(n: usize) -> CharacterTable {
    assert!((1..=6).contains(&n));
    let parts = partitions(n);
    let values: Vec<Vec<BigInt>> = parts
        .iter()
        .map(|lam| parts.iter().map(|rho| mn_char(lam, rho.parts())).collect())
        .collect();
    let class_sizes = parts.iter().map(|rho| class_size(n, rho)).collect();
    let t = CharacterTable {
        n,
        parts,
        values,
        class_sizes,
    };
    assert!(t.row_orthogonality() && t.column_orthogonality());
    t
}

impl CharacterTable {
    pub fn value(&self, lam: &Partition, rho: &Partition) -> &BigInt {
        let r = self.parts.iter().position(|p| p == lam).expect("row label");
        let c = self.parts.iter().position(|p| p == rho).expect("column label");
        &self.values[r][c]
    }

    /// Degree of the irreducible: value on the identity class.
    pub fn degree(&self, lam: &Partition) -> BigInt {
        self.value(lam, &Partition::new(vec![1; self.n])).clone()
    }

    pub fn row_orthogonality(&self) -> bool {
        let order = BigInt::from(factorial(self.n));
        for a in 0..self.parts.len() {
            for b in 0..self.parts.len() {
                let sum: BigInt = (0..self.parts.len())
                    .map(|c| &self.class_sizes[c] * &self.values[a][c] * &self.values[b][c])
                    .sum();
                let expect = if a == b { order.clone() } else { BigInt::zero() };
                if sum != expect {
                    return false;
                }
            }
        }
        true
    }

    pub fn column_orthogonality(&self) -> bool {
        let order = BigRational::from(BigInt::from(factorial(self.n)));
        for c in 0..self.parts.len() {
            for d in 0..self.parts.len() {
                let sum: BigInt = (0..self.parts.len())
                    .map(|a| &self.values[a][c] * &self.values[a][d])
                    .sum();
                let expect = if c == d {
                    &order / BigRational::from(self.class_sizes[c].clone())
                } else {
                    BigRational::zero()
                };
                if BigRational::from(sum) != expect {
                    return false;
                }
            }
        }
        true
    }
}

/// Standard Young tableaux of shape lambda, counted by brute-force
/// corner removal; the independent oracle for identity-column values.
pub fn count_syt(lambda: &Partition) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    let parts = lambda.parts();
    let mut acc = BigInt::zero();
    for k in 0..parts.len() {
        // corner cell: last cell of row k
        if k + 1 < parts.len() && parts[k] == parts[k + 1] {
            continue;
        }
        let mut sub: Vec<usize> = parts.to_vec();
        sub[k] -= 1;
        acc += count_syt(&Partition::new(sub));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_two_table() {
        let t = character_table(2);
        let triv = Partition::new(vec![2]);
        let sign = Partition::new(vec![1, 1]);
        let e = Partition::new(vec![1, 1]);
        let s = Partition::new(vec![2]);
        assert_eq!(t.value(&triv, &e), &BigInt::from(1));
        assert_eq!(t.value(&triv, &s), &BigInt::from(1));
        assert_eq!(t.value(&sign, &e), &BigInt::from(1));
        assert_eq!(t.value(&sign, &s), &BigInt::from(-1));
    }

    #[test]
    fn trivial_character_is_one_everywhere() {
        for n in 1..=5 {
            let t = character_table(n);
            let triv = Partition::new(vec![n]);
            for rho in &t.parts {
                assert_eq!(t.value(&triv, rho), &BigInt::one());
            }
        }
    }

    #[test]
    fn degrees_count_standard_tableaux() {
        for n in 1..=5 {
            let t = character_table(n);
            for lam in &t.parts {
                assert_eq!(t.degree(lam), count_syt(lam));
            }
        }
    }
}
