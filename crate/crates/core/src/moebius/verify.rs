use serde::{Deserialize, Serialize};

use super::{pgl2_elements, Moebius};
use crate::error::Result;
use crate::gfq::{Embedding, Field};

/// Exhaustive check that every non-identity element of PGL2(F_q) has one or
/// two fixed points over F_{q^2}, and exactly one precisely when its order is p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P1fpReport {
    pub schema: String,
    pub field: String,
    pub elements_checked: u64,
    pub one_fixed_point: u64,
    pub two_fixed_points: u64,
    pub order_p: u64,
    pub exceptions: Vec<String>,
    pub ok: bool,
    pub summary: String,
}

pub fn verify_p1fp(field: &Field) -> Result<P1fpReport> {
    let e = Embedding::tower(field, 2)?;
    let p = field.characteristic() as u64;
    let all = pgl2_elements(field);
    let (mut one, mut two, mut order_p) = (0, 0, 0);
    let mut exceptions = Vec::new();
    for m in all.iter().filter(|m| !m.is_identity()) {
        let fixed = m.fixed_points_in(&e)?.len();
        let ord = m.order();
        match fixed {
            1 => one += 1,
            2 => two += 1,
            _ => {}
        }
        if ord == p {
            order_p += 1;
        }
        if !(fixed == 1 || fixed == 2) || ((fixed == 1) != (ord == p)) {
            exceptions.push(describe(m, fixed, ord));
        }
    }
    let ok = exceptions.is_empty();
    let summary = if ok {
        format!(
            "{} elements checked, all satisfy 1-or-2 fixed points, order-{} \u{21d4} one fixed point",
            all.len(),
            p
        )
    } else {
        format!("{} elements checked, {} exceptions", all.len(), exceptions.len())
    };
    Ok(P1fpReport {
        schema: "covercensus.p1fp/1".into(),
        field: field.to_string(),
        elements_checked: all.len() as u64,
        one_fixed_point: one,
        two_fixed_points: two,
        order_p,
        exceptions,
        ok,
        summary,
    })
}

fn describe(m: &Moebius, fixed: usize, ord: u64) -> String {
    format!("{m}: {fixed} fixed points, order {ord}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f5_report() {
        let r = verify_p1fp(&Field::auto(5, 1).unwrap()).unwrap();
        assert!(r.ok);
        assert_eq!(r.elements_checked, 120);
        // the order-5 elements are the 24 non-identity unipotents
        assert_eq!(r.order_p, 24);
        assert_eq!(r.one_fixed_point, 24);
        assert_eq!(r.two_fixed_points, 95);
        assert_eq!(
            r.summary,
            "120 elements checked, all satisfy 1-or-2 fixed points, order-5 \u{21d4} one fixed point"
        );
    }
}
