use super::elem::Cyclo;
use crate::error::{Error, Result};
use crate::scalar::{IntScalar, Scalar};

fn check_shape<T: Scalar>(rows: &[Vec<Cyclo<T>>]) -> Result<()> {
    let Some(first) = rows.first() else {
        return Ok(());
    };
    let level = first.first().map(Cyclo::level);
    for row in rows {
        if row.len() != first.len() {
            return Err(Error::ArityMismatch {
                expected: first.len(),
                found: row.len(),
            });
        }
        for x in row {
            let l = level.unwrap_or(x.level());
            if x.level() != l {
                return Err(Error::MixedLevels(l, x.level()));
            }
        }
    }
    Ok(())
}

fn eliminate<T: Scalar>(mut rows: Vec<Vec<Cyclo<T>>>, normalize: impl Fn(&mut [Cyclo<T>])) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            // row_r ← pivot·row_r − a·row_rank keeps everything integral.
            let a = rows[r][c].clone();
            let (head, tail) = rows.split_at_mut(r);
            let prow = &head[rank];
            for (x, y) in tail[0][c..].iter_mut().zip(&prow[c..]) {
                *x = &(&pivot * x) - &(&a * y);
            }
            normalize(&mut tail[0][c..]);
        }
        rank += 1;
    }
    rank
}

/// Rank of a matrix over `ℚ(ζ_N)`, computed without divisions.
///
/// All entries must share one level.
pub fn rank_over_cyclotomic<T: Scalar>(rows: &[Vec<Cyclo<T>>]) -> Result<usize> {
    check_shape(rows)?;
    Ok(eliminate(rows.to_vec(), |_| {}))
}

/// Same as [`rank_over_cyclotomic`] for cyclotomic integers, dividing each
/// updated row by the gcd of its coefficients to keep entries small.
pub fn rank_over_cyclotomic_integers<T: IntScalar>(rows: &[Vec<Cyclo<T>>]) -> Result<usize> {
    check_shape(rows)?;
    Ok(eliminate(rows.to_vec(), |row| {
        let g = row
            .iter()
            .flat_map(|x| x.coeffs().iter())
            .fold(T::zero(), |g, c| g.gcd(c));
        if g > T::one() {
            for x in row.iter_mut() {
                let coeffs = x.coeffs().iter().map(|c| c.clone() / g.clone()).collect();
                *x = Cyclo::from_coeffs(x.level_data(), coeffs);
            }
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Z = Cyclo<BigInt>;

    #[test]
    fn dependent_rows_over_q_zeta6() {
        let z = Z::root(6, 1).unwrap();
        let one = Z::one(z.level_data());
        let z2 = Z::root(6, 2).unwrap();
        let m = vec![vec![&one + &z, one.clone()], vec![&z + &z2, z.clone()]];
        assert_eq!(rank_over_cyclotomic(&m).unwrap(), 1);
        assert_eq!(rank_over_cyclotomic_integers(&m).unwrap(), 1);
    }

    #[test]
    fn identity_and_zero() {
        let l = super::super::level::cyclotomic_level(5).unwrap();
        let (o, z) = (Z::one(&l), Z::zero(&l));
        let id = vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]];
        assert_eq!(rank_over_cyclotomic_integers(&id).unwrap(), 2);
        assert_eq!(rank_over_cyclotomic_integers(&[vec![z.clone(); 3]]).unwrap(), 0);
        assert_eq!(rank_over_cyclotomic::<BigInt>(&[]).unwrap(), 0);
    }

    #[test]
    fn mixed_levels_rejected() {
        let m = vec![vec![Z::root(4, 1).unwrap(), Z::root(6, 1).unwrap()]];
        assert!(matches!(rank_over_cyclotomic(&m), Err(Error::MixedLevels(4, 6))));
    }
}
