use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::inv_w;
use crate::scalars::Rational;
use crate::verify::{commutant_dim, ColMatrix, GelfandCertificate};

use super::engine::{AdapterData, FiniteSemigroup};
use super::green::{green_relations, GreenData};
use super::trace::{trace_certificate, TraceCertificate};
use super::HypothesisFailure;

/// A failed structural check of the model, with the witnessing elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelCheckFailure {
    ModuleAxiom { x: usize, y: usize },
    ActionTriple { x: usize, y: usize, w: usize },
    SignCocycle { x: usize, y: usize, w: usize },
    ZeroPropagation { x: usize, y: usize, w: usize },
}

impl std::fmt::Display for ModelCheckFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelCheckFailure::ModuleAxiom { x, y } => {
                write!(f, "module axiom fails: M({x})M({y}) != M({x}*{y})")
            }
            ModelCheckFailure::ActionTriple { x, y, w } => {
                write!(f, "action triple fails at x={x}, y={y}, basis w={w}")
            }
            ModelCheckFailure::SignCocycle { x, y, w } => {
                write!(f, "sign cocycle fails at x={x}, y={y}, basis w={w}")
            }
            ModelCheckFailure::ZeroPropagation { x, y, w } => {
                write!(f, "zero propagation fails at x={x}, y={y}, basis w={w}")
            }
        }
    }
}

/// The involution Gelfand model of a finite semigroup satisfying the
/// verified hypotheses: the basis is the set of semigroup involutions
/// (elements `w` of a maximal subgroup `G_e` with `w^2 = e`), and an
/// element `x` sends the basis vector of `w` to zero when `xe` drops out
/// of the D-class of `e`, and otherwise to the signed basis vector
/// `(-1)^{inv(...)} I_{(xe) w (xe)^{-1}}` with the sign read off through
/// the Brandt coordinates.
pub struct SemigroupModel {
    semigroup: FiniteSemigroup,
    green: GreenData,
    cert: TraceCertificate,
    basis: Vec<usize>,
    basis_index: HashMap<usize, usize>,
    /// Idempotent `e` with `w ∈ G_e`, per basis element.
    basis_idempotent: Vec<usize>,
    sectors: Vec<usize>,
    generators: Vec<usize>,
}

impl SemigroupModel {
    pub fn build(
        semigroup: FiniteSemigroup,
        adapter: &AdapterData,
    ) -> Result<Self, HypothesisFailure> {
        let green = green_relations(&semigroup);
        let cert = trace_certificate(&semigroup, &green, adapter)?;

        let mut basis = Vec::new();
        let mut basis_idempotent = Vec::new();
        for w in 0..semigroup.size() {
            let h = green.h_class_of[w];
            let Some(&e) = green
                .idempotents
                .iter()
                .find(|&&e| green.h_class_of[e] == h)
            else {
                continue;
            };
            if semigroup.mul(w, w) == e {
                basis.push(w);
                basis_idempotent.push(e);
            }
        }
        let basis_index = basis
            .iter()
            .enumerate()
            .map(|(i, &w)| (w, i))
            .collect();
        let sectors = basis.iter().map(|&w| green.d_class_of[w]).collect();

        let generators = if adapter.generators.is_empty() || !semigroup.generates(&adapter.generators)
        {
            (0..semigroup.size()).collect()
        } else {
            adapter.generators.clone()
        };

        Ok(SemigroupModel {
            semigroup,
            green,
            cert,
            basis,
            basis_index,
            basis_idempotent,
            sectors,
            generators,
        })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn green(&self) -> &GreenData {
        &self.green
    }

    pub fn certificate_data(&self) -> &TraceCertificate {
        &self.cert
    }

    /// Basis involutions as element indices, in enumeration order.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// D-class id of each basis element; the grading the action preserves.
    pub fn sectors(&self) -> &[usize] {
        &self.sectors
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// The action of element `x` on basis vector `w_idx`: `None` is zero,
    /// otherwise the sign and the image basis index.
    pub fn act(&self, x: usize, w_idx: usize) -> Option<(i64, usize)> {
        let w = self.basis[w_idx];
        let e = self.basis_idempotent[w_idx];
        let dd = self
            .cert
            .for_dclass(self.green.d_class_of[e])
            .expect("basis elements live in coordinatized classes");
        let xe = self.semigroup.mul(x, e);
        if self.green.d_class_of[xe] != dd.dclass_id {
            return None;
        }
        let inversions =
            inv_w(dd.phi_bar(w), dd.phi_bar(xe)).expect("middle coordinates are involutions");
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let xe_inv = dd.trace_inverse(xe);
        let image = self.semigroup.mul(self.semigroup.mul(xe, w), xe_inv);
        let image_idx = self.basis_index[&image];
        Some((sign, image_idx))
    }

    /// Matrix of one element over the involution basis: entries in
    /// `{0, ±1}`, at most one nonzero per column.
    pub fn matrix(&self, x: usize) -> ColMatrix<i64> {
        let cols = (0..self.dimension())
            .map(|w_idx| match self.act(x, w_idx) {
                None => Vec::new(),
                Some((sign, image_idx)) => vec![(image_idx, sign)],
            })
            .collect();
        ColMatrix::from_columns(self.dimension(), cols)
    }

    /// One matrix per semigroup element.
    pub fn all_matrices(&self) -> Vec<ColMatrix<i64>> {
        (0..self.semigroup.size()).map(|x| self.matrix(x)).collect()
    }

    pub fn generator_matrices(&self) -> Vec<(String, ColMatrix<i64>)> {
        self.generators
            .iter()
            .map(|&g| (self.semigroup.name(g).to_string(), self.matrix(g)))
            .collect()
    }

    /// `M(x) M(y) = M(xy)` over the given pairs.
    pub fn check_module_axiom<I>(&self, pairs: I) -> Option<ModelCheckFailure>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mats = self.all_matrices();
        for (x, y) in pairs {
            let product = mats[x].mul(&mats[y]);
            if product != mats[self.semigroup.mul(x, y)] {
                return Some(ModelCheckFailure::ModuleAxiom { x, y });
            }
        }
        None
    }

    pub fn exhaustive_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.semigroup.size();
        (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
    }

    pub fn generator_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.semigroup.size();
        self.generators
            .iter()
            .flat_map(move |&g| (0..n).map(move |y| (g, y)))
    }

    /// `x . (y . I_w) = (xy) . I_w` on single basis vectors, for seeded
    /// random triples.
    pub fn check_action_triples_random(
        &self,
        seed: u64,
        count: usize,
    ) -> Option<ModelCheckFailure> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.semigroup.size();
        for _ in 0..count {
            let x = rng.gen_range(0..n);
            let y = rng.gen_range(0..n);
            let w = rng.gen_range(0..self.dimension());
            if !self.action_triple_holds(x, y, w) {
                return Some(ModelCheckFailure::ActionTriple { x, y, w });
            }
        }
        None
    }

    fn action_triple_holds(&self, x: usize, y: usize, w: usize) -> bool {
        let via_steps = self
            .act(y, w)
            .and_then(|(s1, mid)| self.act(x, mid).map(|(s2, end)| (s1 * s2, end)));
        let direct = self.act(self.semigroup.mul(x, y), w);
        via_steps == direct
    }

    /// The sign identity behind the module axiom, checked literally on
    /// every applicable triple: whenever `x . (y . I_w)` is nonzero,
    /// `(-1)^{inv_w(ye)} (-1)^{inv_{ye w ye^-1}(xf)} = (-1)^{inv_w(xye)}`
    /// in Brandt coordinates.
    pub fn check_sign_cocycle_exhaustive(&self) -> Option<ModelCheckFailure> {
        let n = self.semigroup.size();
        for w_idx in 0..self.dimension() {
            let w = self.basis[w_idx];
            let e = self.basis_idempotent[w_idx];
            let dd = self
                .cert
                .for_dclass(self.green.d_class_of[e])
                .expect("coordinatized");
            let w_bar = dd.phi_bar(w);
            for y in 0..n {
                let ye = self.semigroup.mul(y, e);
                if self.green.d_class_of[ye] != dd.dclass_id {
                    continue;
                }
                let ye_inv = dd.trace_inverse(ye);
                let f = self.semigroup.mul(ye, ye_inv);
                let ye_bar = dd.phi_bar(ye);
                let middle = ye_bar.conjugate(w_bar);
                // consistency of the coordinatization itself
                let v = self.semigroup.mul(self.semigroup.mul(ye, w), ye_inv);
                debug_assert_eq!(&middle, dd.phi_bar(v));
                for x in 0..n {
                    let xf = self.semigroup.mul(x, f);
                    if self.green.d_class_of[xf] != dd.dclass_id {
                        continue;
                    }
                    let xf_bar = dd.phi_bar(xf);
                    let xye_bar = dd.phi_bar(self.semigroup.mul(x, ye));
                    let lhs = (inv_w(w_bar, ye_bar).unwrap()
                        + inv_w(&middle, xf_bar).unwrap())
                        % 2;
                    let rhs = inv_w(w_bar, xye_bar).unwrap() % 2;
                    if lhs != rhs {
                        return Some(ModelCheckFailure::SignCocycle { x, y, w: w_idx });
                    }
                }
            }
        }
        None
    }

    /// `x . (y . I_w) = 0` implies `(xy) . I_w = 0`, all triples.
    pub fn check_zero_propagation_exhaustive(&self) -> Option<ModelCheckFailure> {
        let n = self.semigroup.size();
        for w in 0..self.dimension() {
            for y in 0..n {
                let after_y = self.act(y, w);
                for x in 0..n {
                    let stepwise_zero = match after_y {
                        None => true,
                        Some((_, mid)) => self.act(x, mid).is_none(),
                    };
                    if stepwise_zero && self.act(self.semigroup.mul(x, y), w).is_some() {
                        return Some(ModelCheckFailure::ZeroPropagation { x, y, w });
                    }
                }
            }
        }
        None
    }

    /// `sum_i m_i * |involutions of G_{e_i}|`.
    pub fn expected_dimension(&self) -> usize {
        self.cert
            .dclasses
            .iter()
            .map(|dd| dd.m * dd.group_involution_count(&self.semigroup))
            .sum()
    }

    /// Total number of simple modules, `sum_i prod_j p(n_j^(i))`.
    pub fn expected_simple_count(&self) -> usize {
        self.cert.dclasses.iter().map(|dd| dd.simple_count()).sum()
    }

    /// Commutant dimension of the generator matrices over the rationals.
    pub fn commutant_dimension(&self) -> usize {
        let mats: Vec<_> = self
            .generators
            .iter()
            .map(|&g| self.matrix(g).map(|&v| Rational::from_integer(v)).to_dense())
            .collect();
        commutant_dim(&mats)
    }

    pub fn certificate(&self, model: &str, with_commutant: bool) -> GelfandCertificate {
        let commutant = with_commutant.then(|| self.commutant_dimension());
        GelfandCertificate::evaluate(
            model,
            self.dimension(),
            commutant,
            with_commutant.then(|| self.expected_simple_count()),
            Some(self.expected_dimension()),
        )
    }
}
