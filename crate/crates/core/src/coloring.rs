use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Color id, 1-based.
pub type Color = u32;

/// A total assignment of colors `1..=k` to vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    k: Color,
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(k: Color, colors: Vec<Color>) -> Result<Self> {
        if let Some((i, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange {
                vertex: i + 1,
                color: c,
                k,
            });
        }
        Ok(Coloring { k, colors })
    }

    /// Every vertex colored 1.
    pub fn uniform(n: usize, k: Color) -> Self {
        Coloring { k, colors: vec![1; n] }
    }

    /// Independent uniform colors.
    pub fn random<R: Rng + ?Sized>(n: usize, k: Color, rng: &mut R) -> Self {
        Coloring {
            k,
            colors: (0..n).map(|_| rng.gen_range(1..=k)).collect(),
        }
    }

    /// Builds from 0-based color indices.
    pub(crate) fn from_zero_based(k: Color, colors: &[u8]) -> Self {
        Coloring {
            k,
            colors: colors.iter().map(|&c| c as Color + 1).collect(),
        }
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Color {
        self.colors[v - 1]
    }

    pub fn set(&mut self, v: Vertex, c: Color) {
        assert!((1..=self.k).contains(&c), "color {c} out of range 1..={}", self.k);
        self.colors[v - 1] = c;
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    /// Applies a color permutation given as `perm[c - 1] = new color`.
    pub fn permuted(&self, perm: &[Color]) -> Coloring {
        assert_eq!(perm.len(), self.k as usize);
        Coloring {
            k: self.k,
            colors: self.colors.iter().map(|&c| perm[c as usize - 1]).collect(),
        }
    }

    /// Renames colors in order of first appearance, giving the
    /// lexicographically smallest member of the color-permutation orbit.
    pub fn canonical(&self) -> Coloring {
        let mut map = vec![0; self.k as usize];
        let mut next = 1;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let slot = &mut map[c as usize - 1];
                if *slot == 0 {
                    *slot = next;
                    next += 1;
                }
                *slot
            })
            .collect();
        Coloring { k: self.k, colors }
    }

    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::ColoringLength {
                expected: g.n(),
                found: self.colors.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(Coloring::new(2, vec![1, 2]).is_ok());
        assert_eq!(
            Coloring::new(2, vec![1, 3]),
            Err(Error::ColorOutOfRange {
                vertex: 2,
                color: 3,
                k: 2
            })
        );
        assert!(Coloring::new(2, vec![0]).is_err());
    }

    #[test]
    fn canonical_form() {
        let c = Coloring::new(3, vec![3, 3, 1, 2]).unwrap();
        assert_eq!(c.canonical().as_slice(), &[1, 1, 2, 3]);
        assert_eq!(c.permuted(&[2, 3, 1]).as_slice(), &[1, 1, 2, 3]);
    }
}
