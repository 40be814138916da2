use std::collections::BTreeSet;

use invpipes::invdream::{bottom_inv_dream, fd_set, id_set};
use invpipes::pipedream::pd_set;
use invpipes::schubert::{fpf_schubert, fpf_schubert_pd, inv_schubert, inv_schubert_pd, schubert};
use invpipes::{Diagram, FpfInvolution, Involution, Permutation, Polynomial};

fn inv(s: &str) -> Involution {
    s.parse().unwrap()
}

fn fpf(s: &str) -> FpfInvolution {
    s.parse().unwrap()
}

/// Parses products like `x1*x2*(x2+x1)*(x3+x1)` with no other syntax.
fn product(s: &str) -> Polynomial {
    let mut out = Polynomial::one();
    let mut rest = s;
    while !rest.is_empty() {
        rest = rest.trim_start_matches('*');
        let factor;
        if let Some(r) = rest.strip_prefix('(') {
            let end = r.find(')').unwrap();
            factor = r[..end].split('+').map(var).sum::<Polynomial>();
            rest = &r[end + 1..];
        } else {
            let end = rest.find('*').unwrap_or(rest.len());
            factor = var(&rest[..end]);
            rest = &rest[end..];
        }
        out = &out * &factor;
    }
    out
}

fn var(s: &str) -> Polynomial {
    Polynomial::x(s.trim().strip_prefix('x').unwrap().parse().unwrap())
}

fn dreams(list: &[&[(usize, usize)]]) -> BTreeSet<Diagram> {
    list.iter().map(|cells| Diagram::new(cells.iter().copied())).collect()
}

#[test]
fn involution_schubert_products() {
    let cases = [
        ("1432", "(x2+x1)*(x3+x1+x2)"),
        ("35142", "x1*x2*(x2+x1)*(x1+x2+x3+x4)"),
        ("53241", "x1*x2*(x2+x1)*(x3+x1)*(x4+x1)"),
        ("45312", "x1*x2*(x2+x1)*(x3+x1)*(x3+x2)"),
    ];
    for (y, expected) in cases {
        let expected = product(expected).to_string();
        assert_eq!(inv_schubert(&inv(y)).to_string(), expected, "{y}");
        assert_eq!(inv_schubert_pd(&inv(y)).unwrap().to_string(), expected, "{y}");
    }
    assert_eq!(inv_schubert(&inv("1432")).to_string(), "x1^2 + 2*x1*x2 + x2^2 + x1*x3 + x2*x3");
}

#[test]
fn fpf_schubert_products() {
    let cases = [
        ("532614", "(x2+x1)*(x3+x1)*(x4+x1)"),
        ("456123", "(x2+x1)*(x3+x1)*(x3+x2)"),
        ("351624", "(x2+x1)*(x1+x2+x3+x4)"),
    ];
    for (z, expected) in cases {
        let expected = product(expected).to_string();
        assert_eq!(fpf_schubert(&fpf(z)).to_string(), expected, "{z}");
        assert_eq!(fpf_schubert_pd(&fpf(z)).to_string(), expected, "{z}");
    }
}

#[test]
fn schubert_sum_display() {
    let sum = schubert(&"1342".parse().unwrap()) + schubert(&"1423".parse().unwrap());
    assert_eq!(sum, inv_schubert(&inv("1432")));
    assert_eq!(inv("1432").atoms(), vec!["1342".parse::<Permutation>().unwrap(), "1423".parse().unwrap()]);
    assert_eq!(fpf("532614").fpf_atoms(), vec!["13452".parse::<Permutation>().unwrap(), "31254".parse().unwrap()]);
}

#[test]
fn dream_sets() {
    assert_eq!(id_set(&inv("1432")), dreams(&[&[(2, 1), (3, 1)], &[(2, 1), (2, 2)]]));
    assert_eq!(id_set(&inv("1243")), dreams(&[&[(3, 1)], &[(2, 2)]]));
    assert_eq!(id_set(&inv("321")), dreams(&[&[(1, 1), (2, 1)]]));
    let fd = fd_set(&fpf("216543"));
    assert_eq!(fd.len(), 4);
    for d in &fd {
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|c| c.row > c.col));
    }
}

#[test]
fn code_and_bottom_dream() {
    let w: Permutation = "35142".parse().unwrap();
    assert_eq!(w.code(), vec![2, 3, 0, 1, 0]);
    assert_eq!(w.bottom_pipe_dream(), Diagram::new([(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (4, 1)]));
    assert_eq!(inv("35142").inv_code(), vec![1, 2, 0, 1, 0]);
    assert_eq!(bottom_inv_dream(&inv("35142")), Diagram::new([(1, 1), (2, 1), (2, 2), (4, 1)]));
}

#[test]
fn fpf_atoms_of_the_longest_element() {
    let atoms: Vec<Vec<usize>> = fpf("4321").fpf_atoms().iter().map(|w| w.one_line(4)).collect();
    assert_eq!(atoms, vec![vec![1, 3, 4, 2], vec![3, 1, 2, 4]]);
}

#[test]
fn shifted_longest_element_dream_count() {
    for n in 1..=4usize {
        for k in 0..=3usize {
            // product over i < j <= n of (i+j+2k-1)/(i+j-1)
            let (mut num, mut den) = (1u128, 1u128);
            for j in 1..=n {
                for i in 1..j {
                    num *= (i + j + 2 * k - 1) as u128;
                    den *= (i + j - 1) as u128;
                }
            }
            assert_eq!(num % den, 0);
            let w = Permutation::longest(n).shifted_by(k);
            assert_eq!(pd_set(&w).len() as u128, num / den, "n={n} k={k}");
        }
    }
}
