use crate::partition::Partition;

/// `|mean of e^{iθ_j}|` over the selected phases.
///
/// Phasors are taken relative to the first phase, which leaves the modulus
/// unchanged but makes a set of identical phases evaluate to exactly 1.
/// Empty input yields 0.
pub fn order_parameter<I>(phases: I) -> f64
where
    I: IntoIterator<Item = f64>,
{
    let mut it = phases.into_iter();
    let Some(reference) = it.next() else {
        return 0.0;
    };
    let (mut re, mut im, mut n) = (1.0f64, 0.0f64, 1usize);
    for th in it {
        let d = th - reference;
        re += d.cos();
        im += d.sin();
        n += 1;
    }
    let nf = n as f64;
    (re / nf).hypot(im / nf).min(1.0)
}

/// Global and per-class order parameters of one trajectory row.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderParameters {
    pub global: f64,
    pub per_class: Vec<f64>,
}

pub fn order_parameters(row: &[f64], classes: Option<&Partition>) -> OrderParameters {
    OrderParameters {
        global: order_parameter(row.iter().copied()),
        per_class: classes
            .map(|p| {
                p.classes()
                    .iter()
                    .map(|c| order_parameter(c.iter().map(|&i| row[i])))
                    .collect()
            })
            .unwrap_or_default(),
    }
}

/// Phase difference reduced to `(-π, π]`.
pub fn wrapped_difference(a: f64, b: f64) -> f64 {
    use std::f64::consts::{PI, TAU};
    let d = (a - b).rem_euclid(TAU);
    if d > PI {
        d - TAU
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

    use super::*;

    #[test]
    fn analytic_values() {
        assert_eq!(order_parameter([0.3, 0.3, 0.3]), 1.0);
        assert!(order_parameter([0.0, PI]) < 1e-15);
        assert!((order_parameter([0.0, PI / 2.0]) - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(order_parameter(std::iter::empty()), 0.0);
    }

    #[test]
    fn full_turns_are_coherent() {
        assert!((order_parameter([1.0, 1.0 + TAU, 1.0 - 2.0 * TAU]) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn per_class_values() {
        let p = Partition::from_keys(&[0, 0, 1, 1]);
        let r = order_parameters(&[0.5, 0.5, 0.0, PI], Some(&p));
        assert_eq!(r.per_class[0], 1.0);
        assert!(r.per_class[1] < 1e-15);
        assert!(r.global < 1.0);
    }

    #[test]
    fn wrapping() {
        assert!((wrapped_difference(0.1, TAU - 0.1) - 0.2).abs() < 1e-12);
        assert!((wrapped_difference(-0.1, 0.1) + 0.2).abs() < 1e-15);
        assert_eq!(wrapped_difference(2.0, 2.0), 0.0);
    }
}
