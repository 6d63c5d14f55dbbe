//! Bitmask helpers. Subsets of a ground set of size `n` are `u32` masks with
//! bit `i` standing for the `i`-th element.

/// A subset of a small ordered ground set.
pub type Mask = u32;

/// Hard ceiling imposed by the mask width.
pub const MASK_BITS: usize = 31;

#[inline]
pub fn full(n: usize) -> Mask {
    debug_assert!(n <= MASK_BITS);
    ((1u64 << n) - 1) as Mask
}

#[inline]
pub fn card(m: Mask) -> i64 {
    m.count_ones() as i64
}

#[inline]
pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

#[inline]
pub fn comparable(a: Mask, b: Mask) -> bool {
    is_subset(a, b) || is_subset(b, a)
}

/// Iterator over the indices of the set bits, lowest first.
pub fn bits(m: Mask) -> Bits {
    Bits(m)
}

pub struct Bits(Mask);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// All submasks of `m` in increasing numeric order, `0` and `m` included.
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    (0..=m).filter(move |&x| is_subset(x, m))
}

/// All submasks of `m`, visited by the standard `(s - 1) & m` walk (decreasing).
pub fn submasks_desc(m: Mask) -> SubmasksDesc {
    SubmasksDesc {
        m,
        cur: m,
        done: false,
    }
}

pub struct SubmasksDesc {
    m: Mask,
    cur: Mask,
    done: bool,
}

impl Iterator for SubmasksDesc {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if self.cur == 0 {
            self.done = true;
        } else {
            self.cur = (self.cur - 1) & self.m;
        }
        Some(out)
    }
}
