//! Built-in instances: groupoid algebras (group algebras, isolated-object
//! groupoids, pair groupoids) and the four standard non-degenerate right
//! weak Doi-Hopf data over them.

use thiserror::Error;

use crate::comodact::{
    restrict_coaction_to_subalgebra, ActionSide, CoactionSide, ComodactError, WeakAction,
    WeakCoaction,
};
use crate::doihopf::{build_datum, DatumSide, DoiHopfDatum, DoiHopfError};
use crate::hopfcore::{
    tensor_wha, CoalgebraData, HopfError, StructureConstants, WeakHopfAlgebra,
};
use crate::kernel::{vec, FieldSpec, LinMap, Scalar, Tensor};

#[derive(Debug, Error)]
pub enum GalleryError {
    #[error("not a groupoid: {0}")]
    NotAGroupoid(String),
    #[error("unknown gallery name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Comodact(#[from] ComodactError),
    #[error(transparent)]
    DoiHopf(#[from] DoiHopfError),
}

/// A finite groupoid presented by arrows with an explicit composition
/// table: `compose[g][f] = Some(g∘f)` exactly when `source(g) == target(f)`.
#[derive(Debug, Clone)]
pub struct Groupoid {
    pub objects: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub compose: Vec<Vec<Option<usize>>>,
}

impl Groupoid {
    pub fn arrows(&self) -> usize {
        self.source.len()
    }

    /// Checks composability typing, associativity, identities and inverses.
    pub fn validate(&self) -> Result<(), GalleryError> {
        let n = self.arrows();
        let bad = |msg: String| Err(GalleryError::NotAGroupoid(msg));
        if self.source.len() != n || self.target.len() != n || self.compose.len() != n {
            return bad("table sizes disagree".into());
        }
        for g in 0..n {
            if self.source[g] >= self.objects || self.target[g] >= self.objects {
                return bad(format!("arrow {g} has an out-of-range endpoint"));
            }
            for f in 0..n {
                match self.compose[g][f] {
                    Some(h) => {
                        if self.source[g] != self.target[f] {
                            return bad(format!("{g}∘{f} defined but not composable"));
                        }
                        if self.source[h] != self.source[f] || self.target[h] != self.target[g] {
                            return bad(format!("{g}∘{f} has wrong endpoints"));
                        }
                    }
                    None => {
                        if self.source[g] == self.target[f] {
                            return bad(format!("{g}∘{f} composable but undefined"));
                        }
                    }
                }
            }
        }
        // Associativity where defined.
        for g in 0..n {
            for f in 0..n {
                for e in 0..n {
                    let left = self.compose[g][f].and_then(|gf| self.compose[gf][e]);
                    let right = self.compose[f][e].and_then(|fe| self.compose[g][fe]);
                    if left != right {
                        return bad(format!("associativity fails at ({g},{f},{e})"));
                    }
                }
            }
        }
        // Identities per object.
        let mut identity = vec![None; self.objects];
        for o in 0..self.objects {
            'candidates: for e in 0..n {
                if self.source[e] != o || self.target[e] != o {
                    continue;
                }
                for f in 0..n {
                    if self.target[f] == o && self.compose[e][f] != Some(f) {
                        continue 'candidates;
                    }
                    if self.source[f] == o && self.compose[f][e] != Some(f) {
                        continue 'candidates;
                    }
                }
                identity[o] = Some(e);
                break;
            }
            if identity[o].is_none() {
                return bad(format!("object {o} has no identity arrow"));
            }
        }
        // Inverses.
        for f in 0..n {
            let (src, tgt) = (self.source[f], self.target[f]);
            let ok = (0..n).any(|g| {
                self.compose[g][f] == identity[src] && self.compose[f][g] == identity[tgt]
            });
            if !ok {
                return bad(format!("arrow {f} has no inverse"));
            }
        }
        Ok(())
    }

    fn identity_of(&self, object: usize) -> usize {
        (0..self.arrows())
            .find(|&e| {
                self.source[e] == object
                    && self.target[e] == object
                    && self.compose[e][e] == Some(e)
                    && (0..self.arrows()).all(|f| {
                        (self.target[f] != object || self.compose[e][f] == Some(f))
                            && (self.source[f] != object || self.compose[f][e] == Some(f))
                    })
            })
            .expect("validated groupoid")
    }

    fn inverse_of(&self, f: usize) -> usize {
        let id_src = self.identity_of(self.source[f]);
        let id_tgt = self.identity_of(self.target[f]);
        (0..self.arrows())
            .find(|&g| self.compose[g][f] == Some(id_src) && self.compose[f][g] == Some(id_tgt))
            .expect("validated groupoid")
    }
}

/// The cyclic group of order `m` as a one-object groupoid.
pub fn cyclic_groupoid(m: usize) -> Groupoid {
    Groupoid {
        objects: 1,
        source: vec![0; m],
        target: vec![0; m],
        compose: (0..m)
            .map(|a| (0..m).map(|b| Some((a + b) % m)).collect())
            .collect(),
    }
}

/// `n` isolated objects: only identity arrows.
pub fn isolated_groupoid(n: usize) -> Groupoid {
    Groupoid {
        objects: n,
        source: (0..n).collect(),
        target: (0..n).collect(),
        compose: (0..n)
            .map(|a| (0..n).map(|b| if a == b { Some(a) } else { None }).collect())
            .collect(),
    }
}

/// The pair groupoid on `n` objects: arrow `(i,j)` is the unique morphism
/// `j → i`, indexed `i*n + j`.
pub fn pair_groupoid(n: usize) -> Groupoid {
    let arrows = n * n;
    let mut compose = vec![vec![None; arrows]; arrows];
    #[allow(clippy::needless_range_loop)]
    for g in 0..arrows {
        let (i, j) = (g / n, g % n);
        for f in 0..arrows {
            let (k, l) = (f / n, f % n);
            if j == k {
                compose[g][f] = Some(i * n + l);
            }
        }
    }
    Groupoid {
        objects: n,
        source: (0..arrows).map(|g| g % n).collect(),
        target: (0..arrows).map(|g| g / n).collect(),
        compose,
    }
}

/// The groupoid algebra: basis indexed by arrows, product `gf` when
/// composable and zero otherwise, group-like coproduct, counit one on
/// every arrow, antipode the arrow inverse. Passes the full WHA suite.
pub fn groupoid_algebra(
    g: &Groupoid,
    field: FieldSpec,
) -> Result<WeakHopfAlgebra, GalleryError> {
    g.validate()?;
    let n = g.arrows();
    let zero = Scalar::zero(field);
    let one = Scalar::one(field);
    let mut mult = Tensor::zeros(field, &[n, n, n]);
    let mut comult = Tensor::zeros(field, &[n, n, n]);
    for i in 0..n {
        comult.set(&[i, i, i], one.clone());
        for j in 0..n {
            if let Some(k) = g.compose[i][j] {
                mult.set(&[i, j, k], one.clone());
            }
        }
    }
    let unit: Vec<Scalar> = (0..n)
        .map(|i| {
            if g.identity_of(g.source[i]) == i {
                one.clone()
            } else {
                zero.clone()
            }
        })
        .collect();
    let counit = vec![one.clone(); n];
    let antipode = LinMap::from_fn(field, n, n, |i, j| {
        if g.inverse_of(j) == i {
            one.clone()
        } else {
            zero.clone()
        }
    });
    Ok(WeakHopfAlgebra::from_constants(&StructureConstants {
        field,
        dim: n,
        mult,
        unit,
        comult,
        counit,
        antipode: Some(antipode),
    })?)
}

/// Resolves a gallery name: `g2`, `g3`, `g4`, `zn(N)`, `pair(N)`, with
/// optional `dual:` and `opcop:` prefixes.
pub fn by_name(name: &str, field: FieldSpec) -> Result<WeakHopfAlgebra, GalleryError> {
    if let Some(rest) = name.strip_prefix("dual:") {
        let h = by_name(rest, field)?;
        return Ok(crate::hopfcore::dual_wha(&h)?);
    }
    if let Some(rest) = name.strip_prefix("opcop:") {
        let h = by_name(rest, field)?;
        return Ok(crate::hopfcore::op_cop_variants(&h)?.op_cop);
    }
    let parse_arg = |s: &str, pre: &str| -> Option<usize> {
        s.strip_prefix(pre)?
            .strip_prefix('(')?
            .strip_suffix(')')?
            .parse()
            .ok()
    };
    let groupoid = match name {
        "g2" => cyclic_groupoid(2),
        "g3" => isolated_groupoid(2),
        "g4" => pair_groupoid(2),
        _ => {
            if let Some(m) = parse_arg(name, "zn") {
                cyclic_groupoid(m)
            } else if let Some(m) = parse_arg(name, "pair") {
                pair_groupoid(m)
            } else {
                return Err(GalleryError::UnknownName(name.to_string()));
            }
        }
    };
    groupoid_algebra(&groupoid, field)
}

/// Which of the four standard data to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleKind {
    /// `A = H` with `ρ = Δ`, `C = H^L` with the twisted coalgebra
    /// structure and the action `a · h = 1₍₂₎ ε(a h 1₍₁₎)`.
    Ex1,
    /// `A = H^L ⊆ H` with `ρ = Δ|`, `C = H` with `c · h = ch`.
    Ex2,
    /// `A = H` with `ρ = Δ`, `C = H` with `c · h = ch`.
    Ex3,
    /// Over a WHA `K`: `H = K^op ⊗ K`, `A = K` with
    /// `ρ(a) = (S⁻¹(a₍₃₎) ⊗ a₍₁₎) ⊗ a₍₂₎`, `C = K` with `c·(a⊗b) = acb`.
    Ex4,
}

/// A gallery-built datum together with the embeddings that the comparison
/// isomorphisms need (how `A` and `C` sit inside the base WHA).
#[derive(Debug, Clone)]
pub struct ExampleDatum {
    pub kind: ExampleKind,
    /// The base WHA (`H` for examples 1-3, `K` for example 4).
    pub base: WeakHopfAlgebra,
    pub datum: DoiHopfDatum,
    /// Embedding of the datum's `A` into the base, when `A` is a subspace.
    pub a_embed: Option<LinMap>,
    /// Embedding of the datum's `C` into the base, when `C` is a subspace.
    pub c_embed: Option<LinMap>,
}

/// Builds one of the four standard non-degenerate right weak Doi-Hopf data.
pub fn example_datum(
    kind: ExampleKind,
    base: &WeakHopfAlgebra,
) -> Result<ExampleDatum, GalleryError> {
    let field = base.field();
    let n = base.dim();
    let wba = base.wba().clone();
    match kind {
        ExampleKind::Ex1 => {
            // A = H with the comultiplication as left coaction.
            let coaction = WeakCoaction::new(
                CoactionSide::Left,
                wba.clone(),
                base.algebra().clone(),
                base.coalgebra().comult_map(),
            )?;
            // C = H^L with Δ_C(a) = 1₍₂₎ a ⊗ S(1₍₁₎) and ε_C = ε|.
            let hl = base.wba().base_left().clone();
            let l = hl.dim();
            let d1 = base.wba().delta_one();
            let twisted_comult_of = |a: &[Scalar]| -> Vec<Scalar> {
                // Σ 1₍₂₎ a ⊗ S(1₍₁₎) in H ⊗ H.
                let mut out = vec::zeros(field, n * n);
                for (jk, c) in d1.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (j, k) = (jk / n, jk % n);
                    let left = base
                        .algebra()
                        .product(&vec::unit(field, n, k), a);
                    let right = base.antipode().apply(&vec::unit(field, n, j));
                    vec::axpy(&mut out, c, &vec::kron(&left, &right));
                }
                out
            };
            // Express the H ⊗ H expression in H^L ⊗ H^L coordinates.
            let mut comult = Tensor::zeros(field, &[l, l, l]);
            for i in 0..l {
                let big = twisted_comult_of(&hl.basis()[i]);
                let Some(coords) = pair_coords(&hl, n, &big) else {
                    return Err(GalleryError::Hopf(HopfError::DimMismatch(
                        "twisted coproduct leaves H^L ⊗ H^L".into(),
                    )));
                };
                for (jk, c) in coords.into_iter().enumerate() {
                    comult.set(&[i, jk / l, jk % l], c);
                }
            }
            let counit: Vec<Scalar> = (0..l)
                .map(|i| base.coalgebra().counit_of(&hl.basis()[i]))
                .collect();
            let c_coalg = CoalgebraData::new(field, comult, counit)?;
            // Action a · h = 1₍₂₎ ε(a h 1₍₁₎).
            let mut act = Tensor::zeros(field, &[l, n, l]);
            for i in 0..l {
                for hh in 0..n {
                    let mut out = vec::zeros(field, n);
                    for (jk, c) in d1.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (j, k) = (jk / n, jk % n);
                        let ah = base
                            .algebra()
                            .product(&hl.basis()[i], &vec::unit(field, n, hh));
                        let ah1 = base.algebra().product(&ah, &vec::unit(field, n, j));
                        let eps = base.coalgebra().counit_of(&ah1);
                        vec::axpy(&mut out, &c.mul(&eps), &vec::unit(field, n, k));
                    }
                    let Some(coords) = hl.coords(&out) else {
                        return Err(GalleryError::Hopf(HopfError::DimMismatch(
                            "example-1 action leaves H^L".into(),
                        )));
                    };
                    for (k, c) in coords.into_iter().enumerate() {
                        act.set(&[i, hh, k], c);
                    }
                }
            }
            let action = WeakAction::new(ActionSide::Right, wba, c_coalg, act)?;
            let c_embed = LinMap::from_images(field, n, hl.basis());
            let datum = build_datum(coaction, action, DatumSide::Right)?;
            Ok(ExampleDatum {
                kind,
                base: base.clone(),
                datum,
                a_embed: None,
                c_embed: Some(c_embed),
            })
        }
        ExampleKind::Ex2 => {
            let full_coaction = WeakCoaction::new(
                CoactionSide::Left,
                wba.clone(),
                base.algebra().clone(),
                base.coalgebra().comult_map(),
            )?;
            let hl = base.wba().base_left().clone();
            let coaction = restrict_coaction_to_subalgebra(&full_coaction, &hl)?;
            let a_embed = LinMap::from_images(field, n, hl.basis());
            // C = H as a coalgebra with right multiplication action.
            let action = WeakAction::new(
                ActionSide::Right,
                wba,
                base.coalgebra().clone(),
                base.algebra().mult().clone(),
            )?;
            let datum = build_datum(coaction, action, DatumSide::Right)?;
            Ok(ExampleDatum {
                kind,
                base: base.clone(),
                datum,
                a_embed: Some(a_embed),
                c_embed: None,
            })
        }
        ExampleKind::Ex3 => {
            let coaction = WeakCoaction::new(
                CoactionSide::Left,
                wba.clone(),
                base.algebra().clone(),
                base.coalgebra().comult_map(),
            )?;
            let action = WeakAction::new(
                ActionSide::Right,
                wba,
                base.coalgebra().clone(),
                base.algebra().mult().clone(),
            )?;
            let datum = build_datum(coaction, action, DatumSide::Right)?;
            Ok(ExampleDatum {
                kind,
                base: base.clone(),
                datum,
                a_embed: None,
                c_embed: None,
            })
        }
        ExampleKind::Ex4 => {
            let s_inv = base.antipode_inv()?.clone();
            let variants = crate::hopfcore::op_cop_variants(base)?;
            let big = tensor_wha(&variants.op, base)?;
            let big_wba = big.wba().clone();
            // ρ(a) = (S⁻¹(a₍₃₎) ⊗ a₍₁₎) ⊗ a₍₂₎ ∈ (K^op ⊗ K) ⊗ K.
            let mut images = Vec::with_capacity(n);
            for i in 0..n {
                let d2 = base.coalgebra().comult2_vec(&vec::unit(field, n, i));
                let mut out = vec::zeros(field, n * n * n);
                for (idx, c) in d2.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (a1, rest) = (idx / (n * n), idx % (n * n));
                    let (a2, a3) = (rest / n, rest % n);
                    let s3 = s_inv.apply(&vec::unit(field, n, a3));
                    for (x, cx) in s3.iter().enumerate() {
                        if cx.is_zero() {
                            continue;
                        }
                        let pos = (x * n + a1) * n + a2;
                        out[pos] = out[pos].add(&c.mul(cx));
                    }
                }
                images.push(out);
            }
            let rho = LinMap::from_images(field, n * n * n, &images);
            let coaction = WeakCoaction::new(
                CoactionSide::Left,
                big_wba.clone(),
                base.algebra().clone(),
                rho,
            )?;
            // c · (a ⊗ b) = a c b, products taken in K itself.
            let act = Tensor::from_fn(field, &[n, n * n, n], |idx| {
                let (c, ab, out) = (idx[0], idx[1], idx[2]);
                let (a, b) = (ab / n, ab % n);
                let acb = base.algebra().product(
                    &base.algebra().basis_product(a, c),
                    &vec::unit(field, n, b),
                );
                acb[out].clone()
            });
            let action = WeakAction::new(ActionSide::Right, big_wba, base.coalgebra().clone(), act)?;
            let datum = build_datum(coaction, action, DatumSide::Right)?;
            Ok(ExampleDatum {
                kind,
                base: base.clone(),
                datum,
                a_embed: None,
                c_embed: None,
            })
        }
    }
}

/// Coordinates of `big ∈ H ⊗ H` in the basis `{b_i ⊗ b_j}` of `B ⊗ B`,
/// or `None` if `big` does not lie in that subspace. Reads candidate
/// coordinates off the pivot-pair positions (the basis is in reduced
/// echelon form) and verifies by reconstruction.
fn pair_coords(
    b: &crate::kernel::Subspace,
    ambient: usize,
    big: &[Scalar],
) -> Option<Vec<Scalar>> {
    let field = b.field();
    let l = b.dim();
    let pivots = b.pivots();
    let mut coords = Vec::with_capacity(l * l);
    for i in 0..l {
        for j in 0..l {
            coords.push(big[pivots[i] * ambient + pivots[j]].clone());
        }
    }
    let mut rec = vec::zeros(field, ambient * ambient);
    for i in 0..l {
        for j in 0..l {
            vec::axpy(
                &mut rec,
                &coords[i * l + j],
                &vec::kron(&b.basis()[i], &b.basis()[j]),
            );
        }
    }
    if rec == big {
        Some(coords)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groupoid_builders_produce_the_expected_instances() {
        let q = FieldSpec::Rationals;
        assert_eq!(by_name("g2", q).unwrap().dim(), 2);
        assert_eq!(by_name("g3", q).unwrap().dim(), 2);
        assert_eq!(by_name("g4", q).unwrap().dim(), 4);
        assert_eq!(by_name("zn(5)", q).unwrap().dim(), 5);
        assert_eq!(by_name("pair(3)", q).unwrap().dim(), 9);
        assert!(matches!(
            by_name("qqq", q),
            Err(GalleryError::UnknownName(_))
        ));
    }

    #[test]
    fn broken_composition_tables_are_rejected() {
        let q = FieldSpec::Rationals;
        // Non-associative table on three arrows of one object.
        let mut g = cyclic_groupoid(3);
        g.compose[1][1] = Some(0); // should be 2
        let err = groupoid_algebra(&g, q);
        assert!(matches!(err, Err(GalleryError::NotAGroupoid(_))));

        // Missing inverse: drop invertibility by redirecting composition.
        let mut g = isolated_groupoid(2);
        g.compose[0][0] = None; // identity no longer composes with itself
        assert!(matches!(
            groupoid_algebra(&g, q),
            Err(GalleryError::NotAGroupoid(_))
        ));

        // Composable pair left undefined.
        let mut g = pair_groupoid(2);
        g.compose[1][2] = None; // e01 ∘ e10 is composable
        assert!(matches!(
            groupoid_algebra(&g, q),
            Err(GalleryError::NotAGroupoid(_))
        ));
    }
}
