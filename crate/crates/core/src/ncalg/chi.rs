use super::quiver::Quiver;

/// Dimension vector over all vertices of a quiver; framing entries are ignored by the forms below.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimVector(pub Vec<u64>);

impl DimVector {
    pub fn zero(q: &Quiver) -> Self {
        DimVector(vec![0; q.vertices().len()])
    }

    pub fn add(&self, o: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

fn counted_arrows(q: &Quiver) -> impl Iterator<Item = (usize, usize)> + '_ {
    q.arrows()
        .iter()
        .filter(move |a| !a.marked && !q.is_framing(a.src) && !q.is_framing(a.tgt))
        .map(|a| (a.src, a.tgt))
}

/// χ(a,b) = Σ_i a_i b_i − Σ_e a_{s(e)} b_{t(e)} over internal vertices and unmarked arrows.
pub fn chi_form(q: &Quiver, a: &DimVector, b: &DimVector) -> i64 {
    let v: i64 = q.internal_vertices().iter().map(|&i| (a.0[i] * b.0[i]) as i64).sum();
    let e: i64 = counted_arrows(q).map(|(s, t)| (a.0[s] * b.0[t]) as i64).sum();
    v - e
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockDims {
    pub x_ab: u64,
    pub g_ab: u64,
    pub x_sum: u64,
    pub g_sum: u64,
    pub x_a: u64,
    pub g_a: u64,
    pub x_b: u64,
    pub g_b: u64,
}

fn x_dim(q: &Quiver, d: &DimVector) -> u64 {
    counted_arrows(q).map(|(s, t)| d.0[s] * d.0[t]).sum()
}

fn g_dim(q: &Quiver, d: &DimVector) -> u64 {
    q.internal_vertices().iter().map(|&i| d.0[i] * d.0[i]).sum()
}

/// Dimensions of the block-upper-triangular representation space and gauge group
/// for the flag a ⊂ a+b, next to those of a+b, a and b.
pub fn block_dims(q: &Quiver, a: &DimVector, b: &DimVector) -> BlockDims {
    let x_ab = counted_arrows(q).map(|(s, t)| a.0[s] * a.0[t] + a.0[s] * b.0[t] + b.0[s] * b.0[t]).sum();
    let g_ab = q.internal_vertices().iter().map(|&i| a.0[i] * a.0[i] + a.0[i] * b.0[i] + b.0[i] * b.0[i]).sum();
    let s = a.add(b);
    BlockDims {
        x_ab,
        g_ab,
        x_sum: x_dim(q, &s),
        g_sum: g_dim(q, &s),
        x_a: x_dim(q, a),
        g_a: g_dim(q, a),
        x_b: x_dim(q, b),
        g_b: g_dim(q, b),
    }
}

/// Fixed-point sign exponent (χ(d,d) + d_0) mod 2 for a rank-one framing at the first vertex.
pub fn fixed_point_parity(q: &Quiver, d: &DimVector) -> bool {
    let first = q.internal_vertices()[0];
    (chi_form(q, d, d) + d.0[first] as i64).rem_euclid(2) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c3_values() {
        let q = Quiver::new(&[("0", false)], &[("B1", "0", "0", false), ("B2", "0", "0", false), ("B3", "0", "0", false)]).unwrap();
        assert_eq!(chi_form(&q, &DimVector(vec![2]), &DimVector(vec![3])), -12);
        let bd = block_dims(&q, &DimVector(vec![1]), &DimVector(vec![1]));
        assert_eq!((bd.x_ab, bd.g_ab, bd.x_a, bd.x_b, bd.g_a, bd.g_b), (9, 3, 3, 3, 1, 1));
        let z = block_dims(&q, &DimVector(vec![0]), &DimVector(vec![2]));
        assert_eq!((z.x_ab, z.g_ab), (z.x_b, z.g_b));
    }

    #[test]
    fn conifold_value_and_framing_ignored() {
        let q = Quiver::new(
            &[("0", false), ("1", false), ("inf", true)],
            &[("A", "0", "1", false), ("B", "1", "0", false), ("C", "0", "1", false), ("D", "1", "0", false), ("I", "inf", "0", false)],
        )
        .unwrap();
        assert_eq!(chi_form(&q, &DimVector(vec![1, 0, 5]), &DimVector(vec![0, 1, 7])), -2);
        assert_eq!(chi_form(&q, &DimVector(vec![0, 0, 0]), &DimVector(vec![3, 1, 1])), 0);
    }
}
