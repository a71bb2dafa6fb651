use std::collections::BTreeMap;

use num::BigInt;

use crate::combinatorics::{
    class_size, factorial, integer_partitions, mn_character, IntegerPartition,
};
use crate::scalars::Rational;

/// A class function on `S_n`, stored by cycle type.
pub type ClassFunction = BTreeMap<IntegerPartition, i64>;

/// Inner products `<chi_V, chi^lambda>` of a class function against every
/// irreducible character of `S_n`:
/// `(1/n!) sum_mu |C_mu| chi_V(mu) chi^lambda(mu)`, with the irreducible
/// values supplied by the Murnaghan-Nakayama recursion.
pub fn character_inner_products(
    model_char: &ClassFunction,
    n: usize,
) -> BTreeMap<IntegerPartition, Rational> {
    let order = factorial(n);
    let mut out = BTreeMap::new();
    for lambda in integer_partitions(n) {
        let mut total = BigInt::from(0);
        for mu in integer_partitions(n) {
            let value = *model_char
                .get(&mu)
                .unwrap_or_else(|| panic!("class function missing cycle type {mu}"));
            let irr = mn_character(&lambda, &mu).expect("sizes match");
            total += class_size(&mu) * BigInt::from(value) * BigInt::from(irr);
        }
        let inner = Rational::from_big(total, order.clone()).expect("n! is nonzero");
        out.insert(lambda, inner);
    }
    out
}

/// The character of an irreducible as a class function, for tests and
/// reports.
pub fn irreducible_class_function(lambda: &IntegerPartition) -> ClassFunction {
    integer_partitions(lambda.n())
        .into_iter()
        .map(|mu| {
            let v = mn_character(lambda, &mu).expect("sizes match");
            (mu, v)
        })
        .collect()
}
