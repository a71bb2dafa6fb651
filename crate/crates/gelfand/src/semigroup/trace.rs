use std::collections::HashMap;

use crate::combinatorics::{factorial, integer_partitions, Permutation};

use super::engine::{AdapterData, FiniteSemigroup};
use super::green::GreenData;
use super::HypothesisFailure;

/// Verified structure of one regular D-class: the trace is an inverse
/// semigroup, the maximal subgroup is identified with a sum of symmetric
/// groups, and the Brandt coordinatization is fixed by explicit
/// transversals.
#[derive(Debug)]
pub struct DClassData {
    pub dclass_id: usize,
    /// The chosen idempotent `e_i`.
    pub idempotent: usize,
    /// Block sizes `(n_1, ..., n_l)` of the symmetric-group sum.
    pub young_blocks: Vec<usize>,
    /// The verified isomorphism `G_{e_i} -> S_{n_1} + ... + S_{n_l}`,
    /// with images realized as block-preserving permutations of
    /// consecutive blocks.
    pub iso: HashMap<usize, Permutation>,
    pub elements: Vec<usize>,
    /// Number of L-classes (equivalently R-classes) in the D-class.
    pub m: usize,
    /// Idempotents `f_1, ..., f_m`, one per L-class, with `f_1 = e_i`.
    pub idempotent_list: Vec<usize>,
    /// `u_a` is the least element of `R_{f_a} ∩ L_{e_i}` (forced to `e_i`
    /// itself for `a = 1`); it maps the class of `e_i` to class `a`.
    pub transversal_u: Vec<usize>,
    /// `v_a` is the trace inverse of `u_a`.
    pub transversal_v: Vec<usize>,
    trace_inverse: HashMap<usize, usize>,
    r_index: HashMap<usize, usize>,
    l_index: HashMap<usize, usize>,
    phi_bar: HashMap<usize, Permutation>,
}

impl DClassData {
    /// Unique inverse inside the trace.
    pub fn trace_inverse(&self, x: usize) -> usize {
        self.trace_inverse[&x]
    }

    /// The middle Brandt coordinate of `x`, already mapped through the
    /// group isomorphism: the image of `v_a x u_b` under `iso`.
    pub fn phi_bar(&self, x: usize) -> &Permutation {
        &self.phi_bar[&x]
    }

    /// Full Brandt coordinates `(a, ybar, b)` of `x` in this D-class,
    /// 1-based.
    pub fn coords(&self, x: usize) -> (usize, &Permutation, usize) {
        (self.r_index[&x] + 1, self.phi_bar(x), self.l_index[&x] + 1)
    }

    /// Order of the maximal subgroup, `prod n_j!`.
    pub fn group_order(&self) -> usize {
        self.iso.len()
    }

    /// Number of involutions in the maximal subgroup (elements `w` with
    /// `w^2 = e`).
    pub fn group_involution_count(&self, s: &FiniteSemigroup) -> usize {
        self.iso
            .keys()
            .filter(|&&g| s.mul(g, g) == self.idempotent)
            .count()
    }

    /// Number of simple modules contributed by this D-class:
    /// `prod p(n_j)` over the block sizes.
    pub fn simple_count(&self) -> usize {
        self.young_blocks
            .iter()
            .map(|&b| integer_partitions(b).len())
            .product()
    }
}

/// Brandt coordinates of an element, or zero when the element lies in no
/// coordinatized D-class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrandtCoord {
    Zero,
    Coord {
        a: usize,
        y: Permutation,
        b: usize,
    },
}

impl BrandtCoord {
    /// The Brandt multiplication law: glue when the inner indices match,
    /// zero otherwise.
    pub fn multiply(&self, other: &BrandtCoord) -> BrandtCoord {
        match (self, other) {
            (
                BrandtCoord::Coord { a, y, b },
                BrandtCoord::Coord {
                    a: a2,
                    y: y2,
                    b: b2,
                },
            ) if b == a2 => BrandtCoord::Coord {
                a: *a,
                y: y.compose(y2),
                b: *b2,
            },
            _ => BrandtCoord::Zero,
        }
    }
}

/// The certificate for a whole semigroup: one verified coordinatization
/// per regular D-class.
#[derive(Debug)]
pub struct TraceCertificate {
    pub dclasses: Vec<DClassData>,
    by_dclass: HashMap<usize, usize>,
}

impl TraceCertificate {
    pub fn for_dclass(&self, dclass_id: usize) -> Option<&DClassData> {
        self.by_dclass.get(&dclass_id).map(|&i| &self.dclasses[i])
    }
}

/// Verifies the two model hypotheses on every regular D-class — the trace
/// is an inverse semigroup, and the maximal subgroup is (verifiably)
/// isomorphic to the symmetric-group sum the adapter claims — and fixes
/// the Brandt coordinatization. Reports the first failing hypothesis.
pub fn trace_certificate(
    s: &FiniteSemigroup,
    green: &GreenData,
    adapter: &AdapterData,
) -> Result<TraceCertificate, HypothesisFailure> {
    for spec in &adapter.dclasses {
        if !s.is_idempotent(spec.idempotent) {
            return Err(HypothesisFailure::NotAnIdempotent {
                element: spec.idempotent,
            });
        }
    }

    let mut dclasses = Vec::new();
    let mut by_dclass = HashMap::new();
    for d in green.regular_dclasses() {
        let data = build_dclass(s, green, adapter, d)?;
        by_dclass.insert(d, dclasses.len());
        dclasses.push(data);
    }
    Ok(TraceCertificate {
        dclasses,
        by_dclass,
    })
}

fn build_dclass(
    s: &FiniteSemigroup,
    green: &GreenData,
    adapter: &AdapterData,
    d: usize,
) -> Result<DClassData, HypothesisFailure> {
    let elements = green.d_classes[d].clone();
    let rep = elements[0];
    let in_class = |x: usize| green.d_class_of[x] == d;
    let star = |a: usize, b: usize| -> Option<usize> {
        let p = s.mul(a, b);
        in_class(p).then_some(p)
    };

    // hypothesis: the trace D ∪ {0} is an inverse semigroup, i.e. every
    // element has exactly one inverse under the truncated product
    let mut trace_inverse = HashMap::new();
    for &a in &elements {
        let mut inverses = Vec::new();
        for &b in &elements {
            let aba = star(a, b).and_then(|ab| star(ab, a));
            let bab = star(b, a).and_then(|ba| star(ba, b));
            if aba == Some(a) && bab == Some(b) {
                inverses.push(b);
            }
        }
        if inverses.len() != 1 {
            return Err(HypothesisFailure::TraceNotInverse {
                dclass_rep: rep,
                witness: a,
                inverse_count: inverses.len(),
            });
        }
        trace_inverse.insert(a, inverses[0]);
    }

    // exactly one idempotent per L-class (and per R-class)
    let class_idempotents = green.idempotents_in_dclass(d);
    let mut l_ids: Vec<usize> = elements.iter().map(|&x| green.l_class_of[x]).collect();
    l_ids.sort_unstable();
    l_ids.dedup();
    for &l in &l_ids {
        let count = class_idempotents
            .iter()
            .filter(|&&e| green.l_class_of[e] == l)
            .count();
        if count != 1 {
            return Err(HypothesisFailure::IdempotentsPerLClass {
                dclass_rep: rep,
                count,
            });
        }
    }
    let m = l_ids.len();

    // adapter data for this class; trivial groups need no supplied iso
    let spec = adapter
        .dclasses
        .iter()
        .find(|spec| green.d_class_of[spec.idempotent] == d);
    let (e, young_blocks, iso) = match spec {
        Some(spec) => (
            spec.idempotent,
            spec.young_blocks.clone(),
            spec.iso.clone(),
        ),
        None => {
            let e = *class_idempotents.iter().min().expect("regular class");
            let group_size = green.h_classes[green.h_class_of[e]].len();
            if group_size != 1 {
                return Err(HypothesisFailure::MissingIsoData { dclass_rep: rep });
            }
            let iso: HashMap<usize, Permutation> =
                [(e, Permutation::identity(0))].into_iter().collect();
            (e, Vec::new(), iso)
        }
    };

    verify_iso(s, green, rep, e, &young_blocks, &iso)?;

    // idempotents ordered with the chosen one first; they index both the
    // L- and the R-classes of the grid
    let mut idempotent_list = vec![e];
    let mut rest: Vec<usize> = class_idempotents.iter().copied().filter(|&f| f != e).collect();
    rest.sort_unstable();
    idempotent_list.extend(rest);

    let mut r_of_f = HashMap::new();
    let mut l_of_f = HashMap::new();
    for (a, &f) in idempotent_list.iter().enumerate() {
        r_of_f.insert(green.r_class_of[f], a);
        l_of_f.insert(green.l_class_of[f], a);
    }
    let mut r_index = HashMap::new();
    let mut l_index = HashMap::new();
    for &x in &elements {
        r_index.insert(x, r_of_f[&green.r_class_of[x]]);
        l_index.insert(x, l_of_f[&green.l_class_of[x]]);
    }

    // transversals: u_a in R_{f_a} ∩ L_e, least by element index, with
    // u_1 = e so that the group sits at coordinates (1, G, 1)
    let mut transversal_u = Vec::with_capacity(m);
    for (a, &f) in idempotent_list.iter().enumerate() {
        let u = if a == 0 {
            e
        } else {
            *elements
                .iter()
                .find(|&&x| {
                    green.r_class_of[x] == green.r_class_of[f]
                        && green.l_class_of[x] == green.l_class_of[e]
                })
                .expect("every H-class of a D-class is nonempty")
        };
        transversal_u.push(u);
    }
    let transversal_v: Vec<usize> = transversal_u.iter().map(|&u| trace_inverse[&u]).collect();
    for a in 0..m {
        debug_assert_eq!(s.mul(transversal_u[a], transversal_v[a]), idempotent_list[a]);
        debug_assert_eq!(s.mul(transversal_v[a], transversal_u[a]), e);
    }

    // middle coordinates, cached for every element of the class
    let mut phi_bar = HashMap::new();
    for &x in &elements {
        let a = r_index[&x];
        let b = l_index[&x];
        let y = s.mul(s.mul(transversal_v[a], x), transversal_u[b]);
        let image = iso.get(&y).ok_or_else(|| HypothesisFailure::BadIso {
            dclass_rep: rep,
            reason: format!("coordinate v_a x u_b = {y} lies outside the group"),
        })?;
        phi_bar.insert(x, image.clone());
    }

    Ok(DClassData {
        dclass_id: d,
        idempotent: e,
        young_blocks,
        iso,
        elements,
        m,
        idempotent_list,
        transversal_u,
        transversal_v,
        trace_inverse,
        r_index,
        l_index,
        phi_bar,
    })
}

/// Is `p` a permutation preserving the consecutive blocks of the given
/// sizes?
fn is_block_preserving(p: &Permutation, blocks: &[usize]) -> bool {
    let n: usize = blocks.iter().sum();
    if p.degree() != n {
        return false;
    }
    let mut block_of = vec![0usize; n + 1];
    let mut start = 1;
    for (b, &size) in blocks.iter().enumerate() {
        for x in start..start + size {
            block_of[x] = b;
        }
        start += size;
    }
    (1..=n).all(|x| block_of[p.apply(x)] == block_of[x])
}

fn verify_iso(
    s: &FiniteSemigroup,
    green: &GreenData,
    rep: usize,
    e: usize,
    young_blocks: &[usize],
    iso: &HashMap<usize, Permutation>,
) -> Result<(), HypothesisFailure> {
    let bad = |reason: String| HypothesisFailure::BadIso {
        dclass_rep: rep,
        reason,
    };
    let group: Vec<usize> = green.h_classes[green.h_class_of[e]].clone();
    if iso.len() != group.len() || group.iter().any(|g| !iso.contains_key(g)) {
        return Err(bad(format!(
            "map domain has {} elements, the maximal subgroup has {}",
            iso.len(),
            group.len()
        )));
    }
    let expected_order: num::BigInt = young_blocks.iter().map(|&b| factorial(b)).product();
    if num::BigInt::from(group.len()) != expected_order {
        return Err(bad(format!(
            "group order {} does not match the symmetric-group sum order {}",
            group.len(),
            expected_order
        )));
    }
    let mut seen = std::collections::HashSet::new();
    for (g, p) in iso {
        if !is_block_preserving(p, young_blocks) {
            return Err(bad(format!("image of {g} does not preserve the blocks")));
        }
        if !seen.insert(p.clone()) {
            return Err(bad("map is not injective".to_string()));
        }
    }
    if iso[&e] != Permutation::identity(young_blocks.iter().sum()) {
        return Err(bad("identity does not map to the identity".to_string()));
    }
    for &g in &group {
        for &h in &group {
            let lhs = &iso[&s.mul(g, h)];
            let rhs = iso[&g].compose(&iso[&h]);
            if lhs != &rhs {
                return Err(bad(format!("map is not multiplicative at ({g}, {h})")));
            }
        }
    }
    Ok(())
}

/// Brandt coordinates of an arbitrary element: its triple when it lies in
/// a coordinatized D-class, zero otherwise.
pub fn brandt_coords(green: &GreenData, cert: &TraceCertificate, x: usize) -> BrandtCoord {
    match cert.for_dclass(green.d_class_of[x]) {
        None => BrandtCoord::Zero,
        Some(dd) => {
            let (a, y, b) = dd.coords(x);
            BrandtCoord::Coord {
                a,
                y: y.clone(),
                b,
            }
        }
    }
}
