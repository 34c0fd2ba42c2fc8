use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Elem, FiniteGroup, GroupError};

/// Invariant factors `d1 | d2 | ... | dk` of a finite abelian group, each > 1.
/// The empty list is the trivial group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianInvariants(Vec<u64>);

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants(Vec::new())
    }

    /// Normalizes an arbitrary list of cyclic orders (zeros are not allowed,
    /// ones are dropped) into invariant-factor form.
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = u64>) -> Self {
        // prime -> list of prime-power exponents
        let mut parts: Vec<(u64, Vec<u32>)> = Vec::new();
        for n in orders {
            assert!(n > 0, "cyclic order must be positive");
            for (p, e) in factorize(n) {
                match parts.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, exps)) => exps.push(e),
                    None => parts.push((p, vec![e])),
                }
            }
        }
        Self::from_prime_parts(parts)
    }

    fn from_prime_parts(mut parts: Vec<(u64, Vec<u32>)>) -> Self {
        let len = parts.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        for (_, exps) in parts.iter_mut() {
            exps.sort_unstable();
        }
        // The last invariant factor takes the largest power of every prime.
        let mut factors = vec![1u64; len];
        for (p, exps) in &parts {
            for (k, &e) in exps.iter().rev().enumerate() {
                factors[len - 1 - k] *= p.pow(e);
            }
        }
        factors.retain(|&d| d > 1);
        AbelianInvariants(factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> u64 {
        self.0.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.0.iter().all(|&d| d > 1) && self.0.windows(2).all(|w| w[1] % w[0] == 0)
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Abelian invariants of the subgroup with the given members (or the whole
/// group when `members` is `None`), from a census of elements of order
/// dividing `p^k` for every prime `p`.
///
/// With `assert_abelian` the members are checked to commute first.
pub fn abelian_invariants(
    g: &FiniteGroup,
    members: Option<&[Elem]>,
    assert_abelian: bool,
) -> Result<AbelianInvariants, GroupError> {
    let all: Vec<Elem>;
    let members = match members {
        Some(m) => m,
        None => {
            all = g.elements().collect();
            &all
        }
    };
    if assert_abelian
        && !members
            .iter()
            .all(|&a| members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    {
        return Err(GroupError::NotAbelian);
    }
    let n = members.len() as u64;
    let mut parts = Vec::new();
    for (p, a) in factorize(n) {
        // conjugate partition: number of cyclic factors of order >= p^k
        let mut counts = Vec::new();
        let mut prev_log = 0;
        let mut k = 1;
        loop {
            let pk = p.pow(k);
            let c = members.iter().filter(|&&x| g.pow(x, pk) == 0).count() as u64;
            let log = ilog(c, p);
            counts.push(log - prev_log);
            prev_log = log;
            if log >= a {
                break;
            }
            k += 1;
        }
        // counts[k-1] = #{i : lambda_i >= k}
        let num = counts[0] as usize;
        let mut exps = vec![0u32; num];
        for &c in &counts {
            for e in exps.iter_mut().take(c as usize) {
                *e += 1;
            }
        }
        parts.push((p, exps));
    }
    Ok(AbelianInvariants::from_prime_parts(parts))
}

fn ilog(mut x: u64, p: u64) -> u32 {
    let mut e = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0, "census count must be a power of p");
        x /= p;
        e += 1;
    }
    e
}
