//! The standard crystal `B_n(□)` and tensor products.

use std::fmt;

use super::{epsilon, phi, Crystal, CrystalGraph, FiniteCrystal, Label, Weight};

/// `B_n(□)`: letters `1..=n`, `f_i: i -> i+1`, `f_1̄: 1 -> 2`.
#[derive(Debug, Clone, Copy)]
pub struct StandardCrystal {
    pub n: usize,
}

impl Crystal for StandardCrystal {
    type Elem = u32;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, b: &u32) -> Weight {
        let mut w = Weight::zero(self.n);
        w.0[*b as usize - 1] = 1;
        w
    }

    fn f(&self, b: &u32, label: Label) -> Option<u32> {
        let i = match label {
            Label::Even(i) => i as u32,
            Label::Odd => 1,
        };
        (*b == i && (i as usize) < self.n).then_some(i + 1)
    }

    fn e(&self, b: &u32, label: Label) -> Option<u32> {
        let i = match label {
            Label::Even(i) => i as u32,
            Label::Odd => 1,
        };
        (*b == i + 1 && (i as usize) < self.n).then_some(i)
    }
}

impl FiniteCrystal for StandardCrystal {
    fn elements(&self) -> Vec<u32> {
        (1..=self.n as u32).collect()
    }
}

pub fn standard_crystal(n: usize) -> CrystalGraph<u32> {
    assert!(n >= 2, "B_n needs n >= 2");
    CrystalGraph::from_crystal(&StandardCrystal { n })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorElem<X, Y>(pub X, pub Y);

impl<X: fmt::Display, Y: fmt::Display> fmt::Display for TensorElem<X, Y> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

/// `B_1 ⊗ B_2` with the anti-Kashiwara tensor rule. The odd operators act on
/// the right factor exactly when the left factor has weight zero in the
/// first two coordinates.
#[derive(Debug, Clone)]
pub struct Tensor<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Crystal, B: Crystal> Tensor<A, B> {
    pub fn new(left: A, right: B) -> Self {
        assert_eq!(left.rank(), right.rank(), "tensor factors need equal rank");
        Tensor { left, right }
    }

    fn odd_on_right(&self, b1: &A::Elem) -> bool {
        let w = self.left.weight(b1);
        w.k(1) == 0 && w.k(2) == 0
    }
}

impl<A: Crystal, B: Crystal> Crystal for Tensor<A, B> {
    type Elem = TensorElem<A::Elem, B::Elem>;

    fn rank(&self) -> usize {
        self.left.rank()
    }

    fn weight(&self, b: &Self::Elem) -> Weight {
        self.left.weight(&b.0).plus(&self.right.weight(&b.1))
    }

    fn f(&self, b: &Self::Elem, label: Label) -> Option<Self::Elem> {
        let TensorElem(b1, b2) = b;
        let on_left = match label {
            Label::Odd => !self.odd_on_right(b1),
            Label::Even(_) => phi(&self.right, b2, label) <= epsilon(&self.left, b1, label),
        };
        if on_left {
            Some(TensorElem(self.left.f(b1, label)?, b2.clone()))
        } else {
            Some(TensorElem(b1.clone(), self.right.f(b2, label)?))
        }
    }

    fn e(&self, b: &Self::Elem, label: Label) -> Option<Self::Elem> {
        let TensorElem(b1, b2) = b;
        let on_left = match label {
            Label::Odd => !self.odd_on_right(b1),
            Label::Even(_) => phi(&self.right, b2, label) < epsilon(&self.left, b1, label),
        };
        if on_left {
            Some(TensorElem(self.left.e(b1, label)?, b2.clone()))
        } else {
            Some(TensorElem(b1.clone(), self.right.e(b2, label)?))
        }
    }
}

impl<A: FiniteCrystal, B: FiniteCrystal> FiniteCrystal for Tensor<A, B> {
    fn elements(&self) -> Vec<Self::Elem> {
        let right = self.right.elements();
        self.left
            .elements()
            .into_iter()
            .flat_map(|x| right.iter().map(move |y| TensorElem(x.clone(), y.clone())))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::verify_q_axioms;

    #[test]
    fn b2_edges() {
        let g = standard_crystal(2);
        assert_eq!(g.edges(), vec![(1, Label::Even(1), 2), (1, Label::Odd, 2)]);
        let g = standard_crystal(4);
        assert_eq!(g.weight(&3), Weight(vec![0, 0, 1, 0]));
        assert!(verify_q_axioms(&g).is_empty());
    }

    #[test]
    fn tensor_rule_trace() {
        let t = Tensor::new(StandardCrystal { n: 2 }, StandardCrystal { n: 2 });
        // φ(1) = 1 > ε(1) = 0, so f acts on the right factor
        assert_eq!(t.f(&TensorElem(1, 1), Label::Even(1)), Some(TensorElem(1, 2)));
        assert_eq!(t.f(&TensorElem(1, 2), Label::Even(1)), Some(TensorElem(2, 2)));
        assert_eq!(t.f(&TensorElem(2, 1), Label::Even(1)), None);
        // left factor has weight ε_1, so the odd operator acts on it
        assert_eq!(t.f(&TensorElem(1, 1), Label::Odd), Some(TensorElem(2, 1)));
        assert_eq!(t.weight(&TensorElem(1, 2)), Weight(vec![1, 1]));
    }
}
