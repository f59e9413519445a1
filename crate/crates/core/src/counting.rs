//! Exact closed forms for every counted family, plus the identities and the
//! vertex-deletion recurrence used as cross-checks.
//!
//! All arithmetic is on [`BigUint`]; every division is checked to be exact.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::degree::{DegreePartition, DegreeSequence};
use crate::error::{Error, Result};

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(big(base), exp)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * big(i))
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i)
        acc = acc * big(n - i) / big(i + 1);
    }
    acc
}

/// `n! / (k_1! ... k_m!)`, requiring `sum k_i = n`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let n: usize = parts.iter().sum();
    let denom = parts
        .iter()
        .fold(BigUint::one(), |acc, &k| acc * factorial(k));
    factorial(n) / denom
}

fn div_exact(num: BigUint, den: BigUint, what: &'static str) -> Result<BigUint> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InexactDivision(what));
    }
    Ok(q)
}

fn range(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ParameterRange(msg()))
    }
}

/// Labeled trees on `n` vertices: `n^(n-2)`, with 1 for `n = 1`.
pub fn cayley(n: usize) -> Result<BigUint> {
    range(n >= 1, || "cayley needs n >= 1".into())?;
    Ok(if n == 1 {
        BigUint::one()
    } else {
        pow(n, n - 2)
    })
}

/// Forests on `[n]` with roots `1..=k`: `k n^(n-k-1)`, or `n^(n-k-1)` when
/// restricted to vertex `n` lying in tree 1.
pub fn rooted_forest_count(n: usize, k: usize, conditioned: bool) -> Result<BigUint> {
    range(k >= 1 && k < n, || {
        format!("need 1 <= k <= n - 1, got n = {n}, k = {k}")
    })?;
    let base = pow(n, n - k - 1);
    Ok(if conditioned { base } else { big(k) * base })
}

/// Forests of `k` rooted trees on `[n]` (any roots), which is also the
/// number of trees on `n + 1` vertices whose given root has degree `k`:
/// `C(n-1, k-1) n^(n-k)`.
pub fn forests_k_trees(n: usize, k: usize) -> Result<BigUint> {
    range(k >= 1 && k < n, || {
        format!("need 1 <= k <= n - 1, got n = {n}, k = {k}")
    })?;
    Ok(binomial(n - 1, k - 1) * pow(n, n - k))
}

/// Memo table for `T(n, k)`: forests on `[n]` with `k` trees that separate
/// the vertices `1..=k`, computed only from the recurrence obtained by
/// deleting vertex 1.
#[derive(Debug, Clone)]
pub struct RiordanTable {
    rows: Vec<Vec<BigUint>>,
}

impl RiordanTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
        for m in 1..=max_n {
            let mut row = vec![BigUint::zero(); m + 1];
            row[m] = BigUint::one();
            for j in 1..m {
                row[j] = (0..=m - j)
                    .map(|i| binomial(m - j, i) * &rows[m - 1][j - 1 + i])
                    .sum();
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Result<&BigUint> {
        range(k >= 1 && k <= n && n <= self.max_n(), || {
            format!("need 1 <= k <= n <= {}, got n = {n}, k = {k}", self.max_n())
        })?;
        Ok(&self.rows[n][k])
    }
}

pub fn riordan_t(n: usize, k: usize) -> Result<BigUint> {
    RiordanTable::new(n).get(n, k).cloned()
}

/// Spanning trees of the complete multipartite graph with the given part
/// sizes: `n^(m-2) prod (n - n_i)^(n_i - 1)`.
pub fn multipartite_spanning_trees(parts: &[usize]) -> Result<BigUint> {
    range(parts.len() >= 2 && !parts.contains(&0), || {
        format!("need at least two nonempty parts, got {parts:?}")
    })?;
    let n: usize = parts.iter().sum();
    Ok(parts.iter().fold(pow(n, parts.len() - 2), |acc, &ni| {
        acc * pow(n - ni, ni - 1)
    }))
}

/// Both sides of the bipartite convolution identity
/// `sum_{i,j} C(r-2,i-1) C(s-1,j-1) i^(j-1) j^(i-1) (r-i)^(s-j-1) (s-j)^(r-i-1)
///  = r^(s-1) s^(r-2)`.
///
/// A term with `j = s` stands for a second tree with no part-2 vertex: it
/// is `C(r-2,i-1) i^(s-1) s^(i-1)` when that tree is a single vertex
/// (`r - i = 1`) and 0 otherwise.
pub fn identity_bipartite(r: usize, s: usize) -> Result<(BigUint, BigUint)> {
    range(r >= 2 && s >= 1, || {
        format!("need r >= 2, s >= 1, got r = {r}, s = {s}")
    })?;
    let mut lhs = BigUint::zero();
    for i in 1..r {
        for j in 1..=s {
            let lead =
                binomial(r - 2, i - 1) * binomial(s - 1, j - 1) * pow(i, j - 1) * pow(j, i - 1);
            let tail = if j == s {
                if r - i == 1 {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            } else {
                pow(r - i, s - j - 1) * pow(s - j, r - i - 1)
            };
            lhs += lead * tail;
        }
    }
    Ok((lhs, pow(r, s - 1) * pow(s, r - 2)))
}

/// Forests with roots `2..=r+s` on a complete tripartite vertex set in
/// which 1 lies below `r + 1`: vertex 1 is either a child of `r + 1` or a
/// grandchild through a part-3 vertex.
pub fn tripartite_base_count(r: usize, s: usize, t: usize) -> Result<BigUint> {
    range(r >= 1 && s >= 1 && t >= 1, || {
        "part sizes must be positive".into()
    })?;
    Ok(pow(r + s, t) + big(t) * pow(r + s, t - 1))
}

/// Labeled plane trees on `v` vertices: `(2(v-1))! / (v-1)!`.
pub fn plane_labeled(v: usize) -> Result<BigUint> {
    range(v >= 1, || "need v >= 1".into())?;
    div_exact(factorial(2 * (v - 1)), factorial(v - 1), "plane_labeled")
}

pub fn catalan(n: usize) -> Result<BigUint> {
    div_exact(binomial(2 * n, n), big(n + 1), "catalan")
}

/// Unlabeled plane trees on `n + 1` vertices with `p` leaves.
pub fn narayana(n: usize, p: usize) -> Result<BigUint> {
    range(p >= 1 && p <= n, || {
        format!("need 1 <= p <= n, got n = {n}, p = {p}")
    })?;
    div_exact(
        binomial(n + 1, p) * binomial(n - 1, n - p),
        big(n + 1),
        "narayana",
    )
}

/// Compositions of `n` into `m` positive parts: their number and the sum
/// of their first parts.
pub fn composition_stats(n: usize, m: usize) -> Result<(BigUint, BigUint)> {
    range(m >= 1 && m <= n, || {
        format!("need 1 <= m <= n, got n = {n}, m = {m}")
    })?;
    let count = binomial(n - 1, m - 1);
    let sum = div_exact(big(n) * &count, big(m), "composition_stats")?;
    Ok((count, sum))
}

/// Forests of `r` non-leaf labeled `arity`-ary plane trees with `n`
/// internal vertices and roots `1..=r`: `(r/n) C(arity n, n-r) (n-r)!`.
pub fn kary_forest_count(arity: usize, n: usize, r: usize) -> Result<BigUint> {
    range(arity >= 1 && r >= 1 && r <= n, || {
        format!("need arity >= 1 and 1 <= r <= n, got arity = {arity}, n = {n}, r = {r}")
    })?;
    div_exact(
        big(r) * binomial(arity * n, n - r) * factorial(n - r),
        big(n),
        "kary_forest_count",
    )
}

/// Unlabeled `arity`-ary plane trees with `n` internal vertices.
pub fn kary_unlabeled(arity: usize, n: usize) -> Result<BigUint> {
    range(arity >= 1, || "need arity >= 1".into())?;
    div_exact(
        binomial(arity * n + 1, n),
        big(arity * n + 1),
        "kary_unlabeled",
    )
}

/// Both sides of
/// `sum_{i=p}^{n-q} pq/(i(n-i)) C(ki, i-p) C(k(n-i), n-i-q) = (p+q)/n C(kn, n-p-q)`,
/// each evaluated as an exact rational and required to be an integer.
pub fn identity_kary(k: usize, p: usize, q: usize, n: usize) -> Result<(BigUint, BigUint)> {
    range(k >= 1 && p >= 1 && q >= 1 && n >= p + q, || {
        format!("need k, p, q >= 1 and n >= p + q, got k = {k}, p = {p}, q = {q}, n = {n}")
    })?;
    let rat = |num: BigUint, den: usize| BigRational::new(BigInt::from(num), BigInt::from(den));
    let lhs: BigRational = (p..=n - q)
        .map(|i| {
            rat(
                big(p * q) * binomial(k * i, i - p) * binomial(k * (n - i), n - i - q),
                i * (n - i),
            )
        })
        .fold(BigRational::zero(), |a, b| a + b);
    let rhs = rat(big(p + q) * binomial(k * n, n - p - q), n);
    let to_int = |x: BigRational| -> Result<BigUint> {
        if !x.is_integer() {
            return Err(Error::InexactDivision("identity_kary"));
        }
        x.to_integer()
            .to_biguint()
            .ok_or(Error::InexactDivision("identity_kary"))
    };
    Ok((to_int(lhs)?, to_int(rhs)?))
}

fn check_tree_sequence(d: &DegreeSequence) -> Result<()> {
    range(d.is_tree_sequence(), || {
        format!("{d} does not sum to n - 1")
    })
}

/// Plane trees on `[n]` (any root) in which vertex `i` has `d_i` children:
/// always `(n-1)!`.
pub fn degseq_plane_count(d: &DegreeSequence) -> Result<BigUint> {
    if d.n() == 0 {
        return Ok(BigUint::one());
    }
    check_tree_sequence(d)?;
    Ok(factorial(d.n() - 1))
}

/// Rooted trees on `[n]` (any root) in which vertex `i` has `d_i`
/// children: the multinomial `(n-1)! / (d_1! ... d_n!)`.
pub fn degseq_rooted_count(d: &DegreeSequence) -> Result<BigUint> {
    if d.n() == 0 {
        return Ok(BigUint::one());
    }
    check_tree_sequence(d)?;
    Ok(multinomial(d.as_slice()))
}

/// Unlabeled plane trees on `n` vertices with `n_i` vertices of degree
/// `i`: `(1/n) n! / (n_0! n_1! ... n_m!)`.
pub fn erdelyi_etherington(part: &DegreePartition) -> Result<BigUint> {
    let mut parts = vec![part.leaves()];
    parts.extend_from_slice(part.counts());
    div_exact(multinomial(&parts), big(part.n()), "erdelyi_etherington")
}

/// Forests of `r` special `kc`-edge colored trees on `[n]` with roots
/// `1..=r`: `r (kc-1) (n-r-1)! C(kc n - n - 1, n - r - 1)`.
pub fn special_colored_count(n: usize, kc: usize, r: usize) -> Result<BigUint> {
    range(kc >= 1 && r >= 1 && r < n, || {
        format!("need kc >= 1 and 1 <= r <= n - 1, got n = {n}, kc = {kc}, r = {r}")
    })?;
    Ok(big(r) * special_colored_conditioned(n, kc, r)?)
}

/// The members of [`special_colored_count`] with vertex `n` in tree 1;
/// roots are interchangeable, so this is the count divided by `r`.
pub fn special_colored_conditioned(n: usize, kc: usize, r: usize) -> Result<BigUint> {
    range(kc >= 1 && r >= 1 && r < n, || {
        format!("need kc >= 1 and 1 <= r <= n - 1, got n = {n}, kc = {kc}, r = {r}")
    })?;
    if kc == 1 {
        return Ok(BigUint::zero());
    }
    Ok(big(kc - 1) * factorial(n - r - 1) * binomial(kc * n - n - 1, n - r - 1))
}

/// Properly `kc`-edge colored trees on `[n]`: `kc (n-2)! C(kc n - n, n - 2)`.
pub fn colored_tree_count(n: usize, kc: usize) -> Result<BigUint> {
    range(n >= 1 && kc >= 1, || "need n >= 1 and kc >= 1".into())?;
    if n == 1 {
        return Ok(BigUint::one());
    }
    Ok(big(kc) * factorial(n - 2) * binomial(kc * n - n, n - 2))
}

/// Properly `kc`-edge colored trees on `[n]` whose root has degree `r`:
/// `kc (n-2)! C(kc-1, r-1) C((kc-1)(n-1), n-r-1)`.
pub fn colored_root_degree_count(n: usize, kc: usize, r: usize) -> Result<BigUint> {
    range(n >= 2 && kc >= 1 && r >= 1 && r < n, || {
        format!("need n >= 2, kc >= 1 and 1 <= r <= n - 1, got n = {n}, kc = {kc}, r = {r}")
    })?;
    Ok(big(kc)
        * factorial(n - 2)
        * binomial(kc - 1, r - 1)
        * binomial((kc - 1) * (n - 1), n - r - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_helpers() {
        assert_eq!(binomial(5, 2), b(10));
        assert_eq!(binomial(2, 5), b(0));
        assert_eq!(multinomial(&[2, 1, 1]), b(12));
        assert_eq!(factorial(0), b(1));
    }

    #[test]
    fn cayley_and_forests() {
        assert_eq!(cayley(1).unwrap(), b(1));
        assert_eq!(cayley(2).unwrap(), b(1));
        assert_eq!(cayley(3).unwrap(), b(3));
        assert_eq!(cayley(5).unwrap(), b(125));
        assert!(cayley(0).is_err());
        assert_eq!(rooted_forest_count(5, 3, true).unwrap(), b(5));
        assert_eq!(rooted_forest_count(5, 3, false).unwrap(), b(15));
        assert_eq!(rooted_forest_count(7, 6, true).unwrap(), b(1));
        assert!(rooted_forest_count(5, 5, true).is_err());
        assert_eq!(forests_k_trees(4, 2).unwrap(), b(48));
        assert_eq!(forests_k_trees(3, 2).unwrap(), b(6));
        assert_eq!(forests_k_trees(5, 1).unwrap(), b(625));
    }

    #[test]
    fn riordan_recurrence() {
        assert_eq!(riordan_t(3, 1).unwrap(), b(3));
        assert_eq!(riordan_t(6, 6).unwrap(), b(1));
        assert_eq!(riordan_t(6, 2).unwrap(), b(432));
        assert!(riordan_t(3, 0).is_err());
    }

    #[test]
    fn multipartite() {
        assert_eq!(multipartite_spanning_trees(&[2, 3]).unwrap(), b(12));
        assert_eq!(multipartite_spanning_trees(&[1, 1, 1]).unwrap(), b(3));
        assert_eq!(multipartite_spanning_trees(&[1, 1, 2]).unwrap(), b(8));
        assert!(multipartite_spanning_trees(&[4]).is_err());
        assert_eq!(tripartite_base_count(1, 1, 1).unwrap(), b(3));
        assert_eq!(tripartite_base_count(2, 1, 1).unwrap(), b(4));
        assert_eq!(tripartite_base_count(1, 1, 2).unwrap(), b(8));
    }

    #[test]
    fn bipartite_identity_examples() {
        assert_eq!(identity_bipartite(2, 2).unwrap(), (b(2), b(2)));
        assert_eq!(identity_bipartite(3, 2).unwrap(), (b(6), b(6)));
        assert_eq!(identity_bipartite(2, 1).unwrap(), (b(1), b(1)));
    }

    #[test]
    fn plane_numbers() {
        assert_eq!(plane_labeled(2).unwrap(), b(2));
        assert_eq!(plane_labeled(3).unwrap(), b(12));
        assert_eq!(plane_labeled(4).unwrap(), b(120));
        assert_eq!(catalan(1).unwrap(), b(1));
        assert_eq!(catalan(4).unwrap(), b(14));
        assert_eq!(catalan(5).unwrap(), b(42));
        assert_eq!(narayana(4, 2).unwrap(), b(6));
        assert_eq!(narayana(3, 2).unwrap(), b(3));
        assert_eq!(narayana(6, 6).unwrap(), b(1));
        assert_eq!(composition_stats(3, 2).unwrap(), (b(2), b(3)));
        assert_eq!(composition_stats(7, 1).unwrap(), (b(1), b(7)));
        assert_eq!(composition_stats(5, 3).unwrap(), (b(6), b(10)));
    }

    #[test]
    fn kary_numbers() {
        assert_eq!(kary_forest_count(2, 2, 1).unwrap(), b(2));
        assert_eq!(kary_forest_count(2, 2, 2).unwrap(), b(1));
        assert_eq!(kary_forest_count(3, 1, 1).unwrap(), b(1));
        assert_eq!(kary_unlabeled(2, 3).unwrap(), b(5));
        assert_eq!(kary_unlabeled(5, 1).unwrap(), b(1));
        assert_eq!(kary_unlabeled(3, 3).unwrap(), b(12));
        assert_eq!(identity_kary(2, 1, 1, 2).unwrap(), (b(1), b(1)));
        assert_eq!(identity_kary(2, 1, 1, 3).unwrap(), (b(4), b(4)));
        let (l, r) = identity_kary(3, 2, 1, 3).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn degree_counts() {
        let d = |v: &[usize]| DegreeSequence::new(v.to_vec());
        assert_eq!(degseq_plane_count(&d(&[1, 1, 0])).unwrap(), b(2));
        assert_eq!(degseq_plane_count(&d(&[2, 0, 0])).unwrap(), b(2));
        assert_eq!(degseq_plane_count(&d(&[])).unwrap(), b(1));
        assert_eq!(degseq_rooted_count(&d(&[2, 0, 0])).unwrap(), b(1));
        assert_eq!(degseq_rooted_count(&d(&[1, 1, 0])).unwrap(), b(2));
        assert_eq!(degseq_rooted_count(&d(&[4, 0, 0, 0, 0])).unwrap(), b(1));
        assert!(degseq_rooted_count(&d(&[1, 1, 1])).is_err());
        let p = |c: &[usize]| DegreePartition::new(4, c.to_vec()).unwrap();
        assert_eq!(erdelyi_etherington(&p(&[1, 1])).unwrap(), b(3));
        assert_eq!(erdelyi_etherington(&p(&[0, 0, 1])).unwrap(), b(1));
        assert_eq!(erdelyi_etherington(&p(&[3])).unwrap(), b(1));
    }

    #[test]
    fn colored_numbers() {
        assert_eq!(special_colored_count(3, 2, 1).unwrap(), b(2));
        assert_eq!(special_colored_count(4, 2, 1).unwrap(), b(6));
        assert_eq!(special_colored_count(6, 3, 5).unwrap(), b(10));
        assert_eq!(special_colored_conditioned(6, 3, 5).unwrap(), b(2));
        assert_eq!(colored_tree_count(3, 2).unwrap(), b(6));
        assert_eq!(colored_tree_count(4, 2).unwrap(), b(24));
        assert_eq!(colored_tree_count(4, 3).unwrap(), b(168));
        assert_eq!(colored_root_degree_count(3, 2, 1).unwrap(), b(4));
        assert_eq!(colored_root_degree_count(3, 2, 2).unwrap(), b(2));
    }
}
