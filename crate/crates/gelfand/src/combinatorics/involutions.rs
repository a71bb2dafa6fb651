use super::perm::Permutation;
use super::pinj::PartialInjection;

/// Number of 2-cycles of an involution.
pub fn two_cycle_count(w: &Permutation) -> usize {
    debug_assert!(w.is_involution());
    w.support().len() / 2
}

/// All involutions of `S_n`, in the canonical order: by 2-cycle count
/// ascending, then lexicographically by one-line notation.
pub fn enumerate_involutions_sn(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images = vec![0usize; n];
    // pair the least unassigned point with itself or with a larger point
    fn rec(n: usize, images: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let Some(first) = (1..=n).find(|&x| images[x - 1] == 0) else {
            out.push(Permutation::from_images(images.clone()).unwrap());
            return;
        };
        images[first - 1] = first;
        rec(n, images, out);
        images[first - 1] = 0;
        for partner in (first + 1)..=n {
            if images[partner - 1] == 0 {
                images[first - 1] = partner;
                images[partner - 1] = first;
                rec(n, images, out);
                images[first - 1] = 0;
                images[partner - 1] = 0;
            }
        }
    }
    rec(n, &mut images, &mut out);
    out.sort_by_key(|w| (two_cycle_count(w), w.images().to_vec()));
    out
}

/// All involutions of `IS_n` (partial maps `w` with `dom(w) = im(w)` and
/// `w ∘ w` the identity on the domain), in the canonical order: by domain
/// size descending, then lexicographically by the serialized image array.
pub fn enumerate_involutions_isn(n: usize) -> Vec<PartialInjection> {
    let mut out = Vec::new();
    let mut subset = Vec::new();
    fn subsets(n: usize, from: usize, subset: &mut Vec<usize>, out: &mut Vec<PartialInjection>) {
        // involutions supported on this subset: embed the involutions of a
        // symmetric group on the subset
        for w in enumerate_involutions_sn(subset.len()) {
            let mut images = vec![0usize; n];
            for (pos, &point) in subset.iter().enumerate() {
                images[point - 1] = subset[w.apply(pos + 1) - 1];
            }
            out.push(PartialInjection::from_images(images).unwrap());
        }
        for next in from..=n {
            subset.push(next);
            subsets(n, next + 1, subset, out);
            subset.pop();
        }
    }
    subsets(n, 1, &mut subset, &mut out);
    out.sort_by_key(|w| (n - w.rank(), w.images().to_vec()));
    out
}
