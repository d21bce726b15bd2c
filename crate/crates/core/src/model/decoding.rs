//! SIC decoding orders over the 2N uplink sub-messages.

use super::ModelError;

/// Message identifier `(device, part)` with part in {0, 1}.
pub type MessageId = (usize, usize);

/// A permutation of the 2N uplink messages fixing the SIC sequence.
///
/// `sequence()[0]` is decoded first. Ranks run 1..=2N with the convention
/// that a *smaller* rank decodes *later*, so the interference set of a
/// message is exactly the active messages of strictly smaller rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodingOrder {
    seq: Vec<MessageId>,
    rank: Vec<[usize; 2]>,
}

impl DecodingOrder {
    pub fn new(seq: Vec<MessageId>, n_devices: usize) -> Result<Self, ModelError> {
        if seq.len() != 2 * n_devices {
            return Err(ModelError::InvalidOrder(format!(
                "expected {} messages, got {}",
                2 * n_devices,
                seq.len()
            )));
        }
        let mut rank = vec![[usize::MAX; 2]; n_devices];
        let total = seq.len();
        for (i, &(n, j)) in seq.iter().enumerate() {
            if n >= n_devices || j > 1 {
                return Err(ModelError::InvalidOrder(format!(
                    "message ({n},{j}) out of range"
                )));
            }
            if rank[n][j] != usize::MAX {
                return Err(ModelError::InvalidOrder(format!(
                    "message ({n},{j}) appears twice"
                )));
            }
            rank[n][j] = total - i;
        }
        Ok(DecodingOrder { seq, rank })
    }

    /// Rank of message `(n, j)`; a bijection onto 1..=2N.
    pub fn position(&self, n: usize, j: usize) -> Result<usize, ModelError> {
        self.rank
            .get(n)
            .and_then(|r| r.get(j))
            .copied()
            .filter(|&p| p != usize::MAX)
            .ok_or_else(|| ModelError::InvalidOrder(format!("message ({n},{j}) not in order")))
    }

    pub fn sequence(&self) -> &[MessageId] {
        &self.seq
    }

    pub fn n_devices(&self) -> usize {
        self.rank.len()
    }

    /// Active-message interference set of `(n, j)`: messages decoded later.
    pub fn decoded_later(&self, n: usize, j: usize) -> Vec<MessageId> {
        let pos = self.rank[n][j];
        self.seq
            .iter()
            .copied()
            .filter(|&(m, l)| self.rank[m][l] < pos)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_are_a_bijection() {
        let o = DecodingOrder::new(vec![(1, 0), (0, 0), (0, 1), (1, 1)], 2).unwrap();
        let mut ranks: Vec<usize> = (0..2)
            .flat_map(|n| (0..2).map(move |j| (n, j)))
            .map(|(n, j)| o.position(n, j).unwrap())
            .collect();
        ranks.sort_unstable();
        assert_eq!(ranks, vec![1, 2, 3, 4]);
        // first decoded has the largest rank
        assert_eq!(o.position(1, 0).unwrap(), 4);
        assert_eq!(o.position(1, 1).unwrap(), 1);
    }

    #[test]
    fn rejects_duplicates_and_bad_sizes() {
        assert!(DecodingOrder::new(vec![(0, 0), (0, 0)], 1).is_err());
        assert!(DecodingOrder::new(vec![(0, 0)], 1).is_err());
        assert!(DecodingOrder::new(vec![(0, 0), (0, 2)], 1).is_err());
    }

    #[test]
    fn interference_set_is_suffix() {
        let o = DecodingOrder::new(vec![(0, 0), (0, 1), (1, 0), (1, 1)], 2).unwrap();
        assert_eq!(o.decoded_later(0, 0), vec![(0, 1), (1, 0), (1, 1)]);
        assert_eq!(o.decoded_later(1, 1), Vec::<MessageId>::new());
    }
}
