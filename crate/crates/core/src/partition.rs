//! Set partitions of a mask via restricted growth strings.
//!
//! A restricted growth string `a` over `n` elements has `a[0] = 0` and
//! `a[i] ≤ 1 + max(a[..i])`; element `i` goes to block `a[i]`. Strings are
//! visited in lexicographic order.

use crate::mask::{bits, Mask};

/// Enumerates all set partitions of the elements of a mask.
pub struct SetPartitions {
    elems: Vec<usize>,
    rgs: Vec<usize>,
    // max(rgs[..=i])
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl SetPartitions {
    pub fn new(of: Mask) -> Self {
        let elems: Vec<usize> = bits(of).collect();
        let n = elems.len();
        SetPartitions {
            elems,
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }

    /// Advances to the next string; `false` once exhausted.
    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        if !self.started {
            self.started = true;
            return true;
        }
        if n <= 1 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 {
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return true;
            }
            i -= 1;
        }
        false
    }

    fn blocks(&self) -> Vec<Mask> {
        let count = self.prefix_max.last().map_or(0, |&m| m + 1);
        let mut out = vec![0 as Mask; count];
        for (&e, &b) in self.elems.iter().zip(&self.rgs) {
            out[b] |= 1 << e;
        }
        out
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<Mask>;

    fn next(&mut self) -> Option<Vec<Mask>> {
        if self.done || !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.blocks())
    }
}

/// Bell numbers, for sizing checks.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask;

    #[test]
    fn counts_are_bell_numbers() {
        for n in 0..=7 {
            let count = SetPartitions::new(mask::full(n)).count() as u64;
            assert_eq!(count, bell(n), "n = {n}");
        }
        assert_eq!(bell(5), 52);
    }

    #[test]
    fn partitions_are_valid_and_distinct() {
        let of = 0b10110;
        let mut seen = std::collections::BTreeSet::new();
        for p in SetPartitions::new(of) {
            assert_eq!(p.iter().fold(0, |a, &b| a | b), of);
            assert!(p.iter().all(|&b| b != 0));
            let total: u32 = p.iter().map(|b| b.count_ones()).sum();
            assert_eq!(total, of.count_ones());
            let mut key = p.clone();
            key.sort();
            assert!(seen.insert(key));
        }
        assert_eq!(seen.len(), 5);
    }

    #[test]
    fn empty_mask_has_one_empty_partition() {
        let all: Vec<_> = SetPartitions::new(0).collect();
        assert_eq!(all, vec![Vec::<Mask>::new()]);
    }
}
