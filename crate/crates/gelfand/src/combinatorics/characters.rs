use super::partitions::IntegerPartition;
use super::perm::Permutation;
use super::CombinatoricsError;

/// Irreducible character value `chi^lambda` of `S_n` on the conjugacy
/// class of cycle type `mu`, by the Murnaghan-Nakayama border-strip
/// recursion (computed on beta-sets).
pub fn mn_character(
    lambda: &IntegerPartition,
    mu: &IntegerPartition,
) -> Result<i64, CombinatoricsError> {
    if lambda.n() != mu.n() {
        return Err(CombinatoricsError::SizeMismatch(lambda.n(), mu.n()));
    }
    let beta = beta_set(lambda);
    Ok(mn_rec(&beta, mu.parts()))
}

/// Beta-set of a partition with `l` parts: `{lambda_i + (l - i)}`,
/// a strictly decreasing list.
fn beta_set(lambda: &IntegerPartition) -> Vec<usize> {
    let l = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect()
}

fn mn_rec(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&t, rest)) = mu.split_first() else {
        return 1;
    };
    // Removing a border strip of size t corresponds to replacing some
    // beta-number b by b - t, provided b - t is not already present. The
    // strip height is the number of beta-numbers jumped over.
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < t {
            continue;
        }
        let target = b - t;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| target < x && x < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<usize> = beta.to_vec();
        next.remove(idx);
        let pos = next.partition_point(|&x| x > target);
        next.insert(pos, target);
        total += sign * mn_rec(&next, rest);
    }
    total
}

/// A canonical representative of the conjugacy class of cycle type `mu`:
/// consecutive cycles `(1 .. mu_1)(mu_1+1 .. mu_1+mu_2) ...`.
pub fn class_representative(mu: &IntegerPartition) -> Permutation {
    let n = mu.n();
    let mut images: Vec<usize> = (1..=n).collect();
    let mut start = 1;
    for &part in mu.parts() {
        for offset in 0..part {
            let x = start + offset;
            images[x - 1] = if offset + 1 == part { start } else { x + 1 };
        }
        start += part;
    }
    Permutation::from_images(images).expect("class representative is a permutation")
}
