//! Breadth-first enumeration of the ball of small radius in the Cayley graph.

use std::collections::HashSet;

use crate::group::{Generator, GroupElement, Mat3};
use crate::scalar::Scalar;
use crate::word::{Token, Word};

/// `T1, T1⁻¹, T2, T2⁻¹, R, J`.
pub fn default_generators<T: Scalar>() -> Vec<Token<T>> {
    vec![
        Token::new(Generator::T1, T::one()),
        Token::new(Generator::T1, -T::one()),
        Token::new(Generator::T2, T::one()),
        Token::new(Generator::T2, -T::one()),
        Token::single(Generator::R),
        Token::single(Generator::J),
    ]
}

/// All distinct elements at word distance `<= radius`, grouped by distance.
/// Each element carries the first word (in BFS order) that reached it.
#[derive(Clone, Debug)]
pub struct Ball<T: Scalar> {
    pub layers: Vec<Vec<(GroupElement<T>, Word<T>)>>,
}

impl<T: Scalar> Ball<T> {
    pub fn enumerate(radius: usize, generators: &[Token<T>]) -> Self {
        let steps: Vec<GroupElement<T>> = generators.iter().map(Token::evaluate).collect();
        let mut seen: HashSet<Mat3<T>> = HashSet::new();
        seen.insert(Mat3::identity());
        let mut layers = vec![vec![(GroupElement::identity(), Word::empty())]];
        for _ in 0..radius {
            let mut next = Vec::new();
            for (g, w) in layers.last().expect("at least the identity layer") {
                for (tok, s) in generators.iter().zip(&steps) {
                    let h = g * s;
                    if seen.insert(h.matrix().clone()) {
                        let mut hw = w.clone();
                        hw.push(tok.clone());
                        next.push((h, hw));
                    }
                }
            }
            layers.push(next);
        }
        Ball { layers }
    }

    /// Number of new elements at each distance `0..=radius`.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Cumulative ball sizes.
    pub fn ball_sizes(&self) -> Vec<usize> {
        self.sphere_sizes()
            .iter()
            .scan(0, |acc, n| {
                *acc += n;
                Some(*acc)
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = &(GroupElement<T>, Word<T>)> {
        self.layers.iter().flatten()
    }
}
