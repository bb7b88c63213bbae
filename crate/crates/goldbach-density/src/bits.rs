//! Dense bit vectors with the shifted-OR kernels used by sumsets and
//! Goldbach scans. All arithmetic on whole 64-bit words; no floating point.

/// A fixed-length dense bit vector backed by `u64` words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            len,
            words: vec![0u64; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn clear_bit(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True iff every bit in [0, len) is set.
    pub fn all_ones(&self) -> bool {
        self.count_ones() == self.len
    }

    pub fn fill(&mut self) {
        self.words.fill(u64::MAX);
        self.mask_tail();
    }

    pub fn zero(&mut self) {
        self.words.fill(0);
    }

    /// `self |= src << shift`, dropping bits shifted past the end.
    /// Lengths may differ; source bits landing beyond `self.len` are lost.
    pub fn or_shifted(&mut self, src: &Bits, shift: usize) {
        if shift >= self.len {
            return;
        }
        let word_off = shift / 64;
        let bit_off = shift % 64;
        let n = self.words.len();
        if bit_off == 0 {
            for j in word_off..n {
                if let Some(&s) = src.words.get(j - word_off) {
                    self.words[j] |= s;
                }
            }
        } else {
            for j in word_off..n {
                let lo = src.words.get(j - word_off).copied().unwrap_or(0);
                let hi = if j > word_off {
                    src.words.get(j - word_off - 1).copied().unwrap_or(0)
                } else {
                    0
                };
                self.words[j] |= (lo << bit_off) | (hi >> (64 - bit_off));
            }
        }
        self.mask_tail();
    }

    /// `self |= rotate_left(src, shift)` where rotation is cyclic over a
    /// common length `len`. Both vectors must have that length.
    pub fn or_rotated(&mut self, src: &Bits, shift: usize) {
        assert_eq!(self.len, src.len);
        let m = self.len;
        if m == 0 {
            return;
        }
        let s = shift % m;
        self.or_shifted(src, s);
        if s > 0 {
            // bits i >= m - s wrap to i - (m - s)
            let back = m - s;
            for i in back..m {
                if src.get(i) {
                    self.set(i - back);
                }
            }
        }
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn from_words(len: usize, words: Vec<u64>) -> Option<Self> {
        if words.len() != len.div_ceil(64) {
            return None;
        }
        let mut b = Bits { len, words };
        b.mask_tail();
        Some(b)
    }

    fn mask_tail(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}
