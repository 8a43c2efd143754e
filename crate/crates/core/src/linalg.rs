//! Rank of small matrices over Z/2, rows packed into `u64` words.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn set(&mut self, idx: usize) {
        self.words[idx / 64] |= 1 << (idx % 64);
    }

    pub fn get(&self, idx: usize) -> bool {
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    fn xor_assign(&mut self, other: &BitRow) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    fn lowest_set(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

/// Rank by elimination on the lowest set bit.
pub fn rank(rows: impl IntoIterator<Item = BitRow>) -> usize {
    let mut pivots: Vec<(usize, BitRow)> = Vec::new();
    for mut row in rows {
        while let Some(lead) = row.lowest_set() {
            match pivots.iter().find(|(p, _)| *p == lead) {
                Some((_, pivot)) => row.xor_assign(pivot),
                None => {
                    pivots.push((lead, row));
                    break;
                }
            }
        }
    }
    pivots.len()
}
