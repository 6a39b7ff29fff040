//! Word-level helpers shared by the bitset graph kernels.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn set(bits: &mut [u64], i: usize) {
    bits[i >> 6] |= 1u64 << (i & 63);
}

#[inline]
pub(crate) fn clear(bits: &mut [u64], i: usize) {
    bits[i >> 6] &= !(1u64 << (i & 63));
}

#[inline]
pub(crate) fn test(bits: &[u64], i: usize) -> bool {
    bits[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub(crate) fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_empty(bits: &[u64]) -> bool {
    bits.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn first(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| (i << 6) | w.trailing_zeros() as usize)
}

/// Mask with bits `0..n` set.
pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut bits = vec![!0u64; words_for(n)];
    if n % 64 != 0 {
        if let Some(last) = bits.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    bits
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

pub(crate) fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

/// Iterator over set bit positions in ascending order.
pub(crate) struct Ones<'a> {
    bits: &'a [u64],
    word: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(bits: &'a [u64]) -> Self {
        Ones {
            bits,
            word: 0,
            cur: bits.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some((self.word << 6) | tz);
            }
            self.word += 1;
            if self.word >= self.bits.len() {
                return None;
            }
            self.cur = self.bits[self.word];
        }
    }
}

#[inline]
pub(crate) fn ones(bits: &[u64]) -> Ones<'_> {
    Ones::new(bits)
}
