use super::monomial::Var;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// `e_i` in exactly the listed `x` variables (1-based indices).
pub fn elementary_symmetric(n: usize, i: usize, vars: &[usize]) -> Result<Polynomial> {
    if i > vars.len() {
        return Err(Error::argument(format!(
            "e_{i} needs at least {i} variables, got {}",
            vars.len()
        )));
    }
    if let Some(&bad) = vars.iter().find(|&&k| k == 0 || k > n) {
        return Err(Error::argument(format!(
            "x_{bad} is not a variable of the ring with n = {n}"
        )));
    }
    // e_k over a growing prefix of `vars`; table[k] holds e_k so far.
    let mut table = vec![Polynomial::zero(n); i + 1];
    table[0] = Polynomial::one(n);
    for (seen, &k) in vars.iter().enumerate() {
        let xk = Polynomial::var(n, Var::X(k));
        for deg in (1..=i.min(seen + 1)).rev() {
            let step = &table[deg - 1] * &xk;
            table[deg] = &table[deg] + &step;
        }
    }
    Ok(table.swap_remove(i))
}

/// `e_i(x_1, ..., x_n)`.
pub fn elementary_symmetric_all(n: usize, i: usize) -> Result<Polynomial> {
    let vars: Vec<usize> = (1..=n).collect();
    elementary_symmetric(n, i, &vars)
}

/// `x_1^r + ... + x_n^r`.
pub fn power_sum(n: usize, r: u32) -> Result<Polynomial> {
    if r < 1 {
        return Err(Error::argument("power sums start at r = 1"));
    }
    Ok((1..=n).fold(Polynomial::zero(n), |acc, k| {
        &acc + &Polynomial::x(n, k).pow(r)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e0_is_one() {
        assert_eq!(elementary_symmetric(3, 0, &[]).unwrap(), Polynomial::one(3));
        assert_eq!(
            elementary_symmetric(3, 0, &[2, 3]).unwrap(),
            Polynomial::one(3)
        );
    }

    #[test]
    fn e2_in_three_variables() {
        let x = |k| Polynomial::x(3, k);
        let expect = &(&(&x(1) * &x(2)) + &(&x(1) * &x(3))) + &(&x(2) * &x(3));
        assert_eq!(elementary_symmetric(3, 2, &[1, 2, 3]).unwrap(), expect);
    }

    #[test]
    fn e1_of_single_variable() {
        assert_eq!(
            elementary_symmetric(3, 1, &[3]).unwrap(),
            Polynomial::x(3, 3)
        );
    }

    #[test]
    fn out_of_range_degree_errors() {
        assert!(elementary_symmetric(3, 2, &[1]).is_err());
        assert!(elementary_symmetric(3, 1, &[4]).is_err());
    }

    #[test]
    fn power_sums() {
        let x = |k| Polynomial::x(3, k);
        assert_eq!(power_sum(3, 1).unwrap(), &(&x(1) + &x(2)) + &x(3));
        let y = |k| Polynomial::x(2, k);
        assert_eq!(power_sum(2, 2).unwrap(), &y(1).pow(2) + &y(2).pow(2));
        assert!(power_sum(2, 0).is_err());
    }
}
