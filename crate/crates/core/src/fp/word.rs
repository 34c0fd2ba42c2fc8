use std::fmt;

/// A generator or inverse generator.
///
/// Encoded as a coset-table column: generator `g` is column `2g`, its inverse
/// is column `2g + 1`, so inversion flips the low bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u32);

impl Letter {
    pub fn gen(g: usize) -> Self {
        Letter((2 * g) as u32)
    }

    pub fn gen_inv(g: usize) -> Self {
        Letter((2 * g + 1) as u32)
    }

    pub fn from_column(col: usize) -> Self {
        Letter(col as u32)
    }

    /// Signed 1-based form: `+(g+1)` for a generator, `-(g+1)` for its inverse.
    pub fn from_signed(s: i64) -> Option<Self> {
        match s {
            0 => None,
            s if s > 0 => Some(Letter::gen((s - 1) as usize)),
            s => Some(Letter::gen_inv((-s - 1) as usize)),
        }
    }

    pub fn to_signed(self) -> i64 {
        let g = self.generator() as i64 + 1;
        if self.is_inverse() {
            -g
        } else {
            g
        }
    }

    #[inline]
    pub fn column(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn generator(self) -> usize {
        (self.0 >> 1) as usize
    }

    #[inline]
    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

pub type Word = Vec<Letter>;

pub fn inverse_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverse()).collect()
}

/// Cancels adjacent `x x⁻¹` pairs.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancellation across the ends.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == w[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

/// Representative of the class of a cyclically reduced word under rotation
/// and inversion: the lexicographically least rotation of `w` or `w⁻¹`.
pub fn canonical_relator(w: &[Letter]) -> Word {
    let w = cyclic_reduce(w);
    if w.is_empty() {
        return w;
    }
    let inv = inverse_word(&w);
    let mut best: Option<Word> = None;
    for base in [&w, &inv] {
        for r in 0..base.len() {
            let rot: Word = base[r..].iter().chain(&base[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}
