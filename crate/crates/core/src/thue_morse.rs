//! The Thue-Morse sequence and the square-free ternary word derived from it.
//!
//! `t = 0110100110010110...` is indexed from 0. The ternary word
//! `c = 210201...` records, for each pair of consecutive zeros of `t`, how
//! many ones sit between them. Runs of ones in `t` never exceed two, so `c`
//! is over `{0, 1, 2}`.

use crate::word::{Letter, Word};

/// `t_n`: parity of the number of ones in the binary expansion of `n`.
pub fn thue_morse_bit(n: u64) -> u8 {
    (n.count_ones() & 1) as u8
}

pub fn thue_morse_prefix(len: usize) -> Vec<u8> {
    (0..len as u64).map(thue_morse_bit).collect()
}

/// Lazily generated symbols of `c`, scanning `t` with constant state.
#[derive(Clone, Debug, Default)]
pub struct TernaryStream {
    /// Next index of `t` to read. Index 0 is the first zero and only opens
    /// the first run.
    cursor: u64,
    ones: u8,
}

impl TernaryStream {
    pub fn new() -> Self {
        TernaryStream { cursor: 1, ones: 0 }
    }
}

impl Iterator for TernaryStream {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        if self.cursor == 0 {
            self.cursor = 1;
        }
        loop {
            let bit = thue_morse_bit(self.cursor);
            self.cursor += 1;
            if bit == 1 {
                self.ones += 1;
            } else {
                let symbol = self.ones;
                self.ones = 0;
                debug_assert!(symbol <= 2);
                return Some(symbol);
            }
        }
    }
}

/// The first `len` symbols of `c` as a word over the letters 0, 1, 2.
pub fn squarefree_ternary(len: usize) -> Word {
    TernaryStream::new().take(len).map(|s| Letter::Num(s as u64)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::squares::is_square_free;

    #[test]
    fn bits() {
        assert_eq!(thue_morse_bit(0), 0);
        assert_eq!(thue_morse_bit(1), 1);
        assert_eq!(thue_morse_bit(2), 1);
        assert_eq!(thue_morse_bit(3), 0);
        assert_eq!(thue_morse_prefix(10), [0, 1, 1, 0, 1, 0, 0, 1, 1, 0]);
    }

    #[test]
    fn ternary_prefix() {
        assert_eq!(squarefree_ternary(6), "210201".parse().unwrap());
        assert!(squarefree_ternary(0).is_empty());
        assert!(is_square_free(&squarefree_ternary(1000)));
        assert_eq!(TernaryStream::default().take(6).collect::<Vec<_>>(), [2, 1, 0, 2, 0, 1]);
    }

    #[test]
    fn prefix_property() {
        let long = squarefree_ternary(300);
        for len in [0, 1, 7, 299] {
            assert_eq!(squarefree_ternary(len), long.prefix(len).unwrap());
        }
    }
}
