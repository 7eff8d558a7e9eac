//! The Shannon ring: formal integer combinations of graphs, with disjoint
//! union as addition and the strong product as multiplication. K1 is the
//! unit, the empty combination is zero.
//!
//! Ring equality is never computed, since that would need graph
//! isomorphism testing.
//! Identities are checked at the level of the extended invariants, which
//! all extend linearly: inv(Σ cᵢ·Gᵢ) = Σ cᵢ·inv(Gᵢ). In particular
//! χ(−G) = −χ(G), matching K(−G) = −K(G) and b_k(−G) = −b_k(G).

use std::fmt;

use crate::curvature;
use crate::graph::Graph;
use crate::homology::{self, PoincarePolynomial};
use crate::rational::{self, Rational};
use crate::simplicial;
use crate::wu;
use crate::{Limits, Result};

/// Σ cᵢ·Gᵢ with nonzero integer coefficients; identical graphs (by label
/// equality) are merged, insertion order is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    terms: Vec<(i64, Graph)>,
}

impl RingElement {
    pub fn zero() -> RingElement {
        RingElement { terms: Vec::new() }
    }

    /// The multiplicative unit, 1·K1.
    pub fn one() -> RingElement {
        RingElement::from_graph(crate::generators::complete(1))
    }

    pub fn from_graph(g: Graph) -> RingElement {
        RingElement {
            terms: vec![(1, g)],
        }
    }

    pub fn from_terms(terms: Vec<(i64, Graph)>) -> RingElement {
        let mut e = RingElement { terms };
        e.normalize();
        e
    }

    pub fn terms(&self) -> &[(i64, Graph)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A single graph with coefficient one, if that is what this is.
    pub fn as_single_graph(&self) -> Option<&Graph> {
        match self.terms.as_slice() {
            [(1, g)] => Some(g),
            _ => None,
        }
    }

    fn normalize(&mut self) {
        let mut merged: Vec<(i64, Graph)> = Vec::with_capacity(self.terms.len());
        for (c, g) in self.terms.drain(..) {
            match merged.iter_mut().find(|(_, existing)| *existing == g) {
                Some((coeff, _)) => *coeff += c,
                None => merged.push((c, g)),
            }
        }
        merged.retain(|(c, _)| *c != 0);
        self.terms = merged;
    }

    pub fn negate(&self) -> RingElement {
        RingElement {
            terms: self.terms.iter().map(|(c, g)| (-c, g.clone())).collect(),
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        RingElement::from_terms(terms)
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.add(&other.negate())
    }

    /// Bilinear extension of the strong product.
    pub fn mul(&self, other: &RingElement) -> RingElement {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ga) in &self.terms {
            for (cb, gb) in &other.terms {
                terms.push((ca * cb, ga.strong_product(gb)));
            }
        }
        RingElement::from_terms(terms)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, g)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if i > 0 || *c < 0 {
                write!(f, "{} ", if *c < 0 { "-" } else { "+" })?;
            }
            let mag = c.abs();
            if mag != 1 {
                write!(f, "{mag}·")?;
            }
            write!(f, "graph({}v,{}e)", g.vertex_count(), g.edge_count())?;
        }
        Ok(())
    }
}

/// Which invariant to extend over a ring element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Chi,
    Poincare,
    CurvatureTotal,
    Wu,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantValue {
    Integer(i64),
    Polynomial(PoincarePolynomial),
    Rational(Rational),
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Integer(v) => write!(f, "{v}"),
            InvariantValue::Polynomial(p) => write!(f, "{p}"),
            InvariantValue::Rational(r) => write!(f, "{r}"),
        }
    }
}

/// χ extended linearly.
pub fn extended_chi(e: &RingElement, limits: &Limits) -> Result<i64> {
    let mut total = 0i64;
    for (c, g) in e.terms() {
        total += c * simplicial::euler_characteristic_limited(g, limits)?;
    }
    Ok(total)
}

/// Poincaré polynomial extended coefficient-wise.
pub fn extended_poincare(e: &RingElement, limits: &Limits) -> Result<PoincarePolynomial> {
    let mut acc = PoincarePolynomial::new(Vec::new());
    for (c, g) in e.terms() {
        acc = acc.add_scaled(&homology::betti_limited(g, limits)?, *c);
    }
    Ok(acc)
}

/// Total curvature Σ_x K(x) extended linearly; equals extended χ by
/// Gauss–Bonnet.
pub fn extended_curvature_total(e: &RingElement, limits: &Limits) -> Result<Rational> {
    let mut total = rational::zero();
    for (c, g) in e.terms() {
        total += rational::from_int(*c) * curvature::curvatures_limited(g, limits)?.total();
    }
    Ok(total)
}

/// Wu characteristic extended linearly.
pub fn extended_wu(e: &RingElement, limits: &Limits) -> Result<i64> {
    let mut total = 0i64;
    for (c, g) in e.terms() {
        total += c * wu::wu_characteristic_limited(g, limits)?;
    }
    Ok(total)
}

pub fn extended_invariant(
    e: &RingElement,
    which: Invariant,
    limits: &Limits,
) -> Result<InvariantValue> {
    Ok(match which {
        Invariant::Chi => InvariantValue::Integer(extended_chi(e, limits)?),
        Invariant::Poincare => InvariantValue::Polynomial(extended_poincare(e, limits)?),
        Invariant::CurvatureTotal => {
            InvariantValue::Rational(extended_curvature_total(e, limits)?)
        }
        Invariant::Wu => InvariantValue::Integer(extended_wu(e, limits)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::rational::ratio;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn a_minus_a_is_zero() {
        let a = RingElement::from_graph(generators::complete(3));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn doubled_unit_has_chi_two() {
        let k1 = RingElement::from_graph(generators::complete(1));
        let two = k1.add(&k1);
        assert_eq!(two.terms().len(), 1);
        assert_eq!(two.terms()[0].0, 2);
        assert_eq!(extended_chi(&two, &limits()).unwrap(), 2);
    }

    #[test]
    fn addition_commutes_on_term_multisets() {
        let a = RingElement::from_graph(generators::complete(3));
        let b = RingElement::from_graph(generators::cycle(4));
        let ab = a.add(&b);
        let ba = b.add(&a);
        for (c, g) in ab.terms() {
            assert!(ba.terms().iter().any(|(c2, g2)| c == c2 && g == g2));
        }
        assert_eq!(ab.terms().len(), ba.terms().len());
    }

    #[test]
    fn k1_is_the_unit() {
        let a = RingElement::from_graph(generators::cycle(5));
        let one = RingElement::one();
        let prod = one.mul(&a);
        // unit multiplication relabels, so compare invariants
        assert_eq!(
            extended_chi(&prod, &limits()).unwrap(),
            extended_chi(&a, &limits()).unwrap()
        );
        assert_eq!(
            extended_poincare(&prod, &limits()).unwrap(),
            extended_poincare(&a, &limits()).unwrap()
        );
    }

    #[test]
    fn negated_square_of_k2() {
        let k2 = RingElement::from_graph(generators::complete(2));
        let prod = k2.negate().mul(&k2);
        assert_eq!(prod.terms().len(), 1);
        let (c, g) = &prod.terms()[0];
        assert_eq!(*c, -1);
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 6));
        assert_eq!(extended_chi(&prod, &limits()).unwrap(), -1);
    }

    #[test]
    fn mixed_element_chi_is_linear() {
        // (K4 − C4) * Star(4): χ = (1−0)·1 = 1
        let e = RingElement::from_graph(generators::complete(4))
            .sub(&RingElement::from_graph(generators::cycle(4)))
            .mul(&RingElement::from_graph(generators::star(4)));
        assert_eq!(extended_chi(&e, &limits()).unwrap(), 1);
    }

    #[test]
    fn chi_of_negation_flips_sign() {
        let e = RingElement::from_graph(generators::complete(4));
        assert_eq!(extended_chi(&e.negate(), &limits()).unwrap(), -1);
        let p = extended_poincare(&e, &limits()).unwrap();
        let pn = extended_poincare(&e.negate(), &limits()).unwrap();
        assert_eq!(pn, p.negate());
    }

    #[test]
    fn poincare_is_a_ring_homomorphism_on_samples() {
        let elems = [
            RingElement::from_graph(generators::cycle(4)),
            RingElement::from_graph(generators::complete(3))
                .sub(&RingElement::from_graph(generators::complete(1))),
            RingElement::from_graph(generators::star(3)),
        ];
        for a in &elems {
            for b in &elems {
                let lhs = extended_poincare(&a.mul(b), &limits()).unwrap();
                let rhs = extended_poincare(a, &limits())
                    .unwrap()
                    .multiply(&extended_poincare(b, &limits()).unwrap());
                assert_eq!(lhs, rhs, "p is not multiplicative");
                let chi_lhs = extended_chi(&a.mul(b), &limits()).unwrap();
                let chi_rhs = extended_chi(a, &limits()).unwrap()
                    * extended_chi(b, &limits()).unwrap();
                assert_eq!(chi_lhs, chi_rhs, "chi is not multiplicative");
            }
        }
    }

    #[test]
    fn extended_chi_is_poincare_at_minus_one() {
        let e = RingElement::from_graph(generators::octahedron())
            .sub(&RingElement::from_graph(generators::cycle(5)).mul(
                &RingElement::from_graph(generators::complete(2)),
            ));
        let chi = extended_chi(&e, &limits()).unwrap();
        let p = extended_poincare(&e, &limits()).unwrap();
        assert_eq!(p.evaluate(-1), chi);
    }

    #[test]
    fn curvature_total_matches_chi() {
        let e = RingElement::from_graph(generators::complete(4))
            .sub(&RingElement::from_graph(generators::cycle(4)));
        assert_eq!(
            extended_curvature_total(&e, &limits()).unwrap(),
            ratio(1, 1)
        );
    }

    #[test]
    fn ring_axioms_through_invariants() {
        let a = RingElement::from_graph(generators::complete(2));
        let b = RingElement::from_graph(generators::path(3));
        let c = RingElement::from_graph(generators::cycle(4)).negate();
        let l = limits();
        let chi = |e: &RingElement| extended_chi(e, &l).unwrap();
        let p = |e: &RingElement| extended_poincare(e, &l).unwrap();
        let wuv = |e: &RingElement| extended_wu(e, &l).unwrap();

        // commutativity and associativity of both operations
        assert_eq!(chi(&a.mul(&b)), chi(&b.mul(&a)));
        assert_eq!(p(&a.mul(&b)), p(&b.mul(&a)));
        assert_eq!(chi(&a.mul(&b.mul(&c))), chi(&a.mul(&b).mul(&c)));
        assert_eq!(chi(&a.add(&b.add(&c))), chi(&a.add(&b).add(&c)));
        assert_eq!(wuv(&a.add(&b)), wuv(&b.add(&a)));

        // distributivity
        assert_eq!(
            chi(&a.mul(&b.add(&c))),
            chi(&a.mul(&b).add(&a.mul(&c)))
        );
        assert_eq!(
            p(&a.mul(&b.add(&c))),
            p(&a.mul(&b).add(&a.mul(&c)))
        );

        // units
        assert_eq!(chi(&a.add(&RingElement::zero())), chi(&a));
        assert_eq!(chi(&a.mul(&RingElement::one())), chi(&a));
    }
}
