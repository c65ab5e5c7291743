//! Finite serial rings `S = R[x_1, ..., x_s] / <t_1(x_1), ..., t_s(x_s)>`
//! over a Galois ring `R = GR(p^e, t)`, and their decomposition into chain
//! components.
//!
//! Each modulus is monic and square-free modulo gamma, so `S` is a finite
//! direct product of Galois rings. The splitting is computed exactly through
//! primitive idempotents: one variable at a time, the current component's
//! modulus image is factored over the component residue field, the Bezout
//! idempotent of each factor is mapped back into `S`, and the refinement
//! `eps <- 3 eps^2 - 2 eps^3` turns it into an exact idempotent. The
//! component attached to an idempotent `eps` carries its residue field
//! `F_{q^D}` together with a generator `theta` whose residue class has
//! minimal polynomial of degree `D`, which gives computable isomorphisms
//! between the component residue ring and the abstract field.
//!
//! Elements of `S` are coefficient vectors of length `m = prod deg(t_i)` over
//! the power-product basis `x_1^{a_1} ... x_s^{a_s}`, variable 1 fastest;
//! that coefficient expansion is also the additive isomorphism `S -> R^m`
//! used by the linear-algebra layer.

use num_bigint::BigUint;
use std::collections::HashSet;

use crate::chain::{ChainElem, ChainRing};
use crate::error::{Error, Result};
use crate::factor::{factor_over_field, is_square_free, poly_is_irreducible};
use crate::field::FieldExt;
use crate::linalg::{howell, howell_with_witness, solve_in_span, span_member, HowellForm, Mat};
use crate::poly::{Poly, PolyRing};
use crate::ring::{FiniteField, Ring};

/// Element of a [`SerialRing`]: `m` chain-ring coefficients over the
/// power-product basis.
pub type SerialElem = Vec<ChainElem>;

/// One factor of the product decomposition: a Galois ring `GR(p^e, t D)`
/// carved out of `S` by a primitive idempotent.
#[derive(Clone, Debug)]
pub struct Component {
    /// The primitive idempotent generating this component.
    pub idempotent: SerialElem,
    /// Degree `D` of the component residue field over the base residue field.
    pub residue_degree: usize,
    /// Abstract model `F_q[z] / <mu>` of the component residue field.
    field: FieldExt,
    /// Element of `eps S` whose residue class corresponds to `z`.
    theta: SerialElem,
    /// `eps, theta, ..., theta^(D-1)`: an R-basis of the component.
    theta_pows: Vec<SerialElem>,
    /// Howell form (with witness) of the residue coordinates of `theta_pows`,
    /// used to convert component residues to field coordinates.
    coord: HowellForm,
}

impl Component {
    pub fn field(&self) -> &FieldExt {
        &self.field
    }

    pub fn theta(&self) -> &SerialElem {
        &self.theta
    }
}

/// Frobenius orbit statistics of the joint root tuples of the moduli; the
/// orbit count is the number of chain components of the ring (for `power`
/// = 1) and more generally of scalar extensions by `x^n - ...` moduli.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCounts {
    /// Number of orbits.
    pub count: usize,
    /// Orbit sizes, ascending.
    pub orbit_sizes: Vec<usize>,
    /// Degree of the splitting field used for the computation.
    pub splitting_degree: usize,
}

/// The serial ring `R[x_1, ..., x_s] / <t_1(x_1), ..., t_s(x_s)>`.
#[derive(Debug)]
pub struct SerialRing {
    base: ChainRing,
    moduli: Vec<Poly<ChainRing>>,
    dims: Vec<usize>,
    m: usize,
    /// Exponent tuple of each basis index.
    exps: Vec<Vec<u32>>,
    /// Flattened products of basis monomials: entry [i][j] = basis_i * basis_j.
    basis_mul: Vec<Vec<SerialElem>>,
    components: Vec<Component>,
    warnings: Vec<String>,
}

impl SerialRing {
    /// Builds the quotient and eagerly computes its component decomposition.
    /// Every modulus must be monic of positive degree and square-free modulo
    /// gamma.
    pub fn new(base: ChainRing, moduli: Vec<Poly<ChainRing>>) -> Result<SerialRing> {
        let rx = PolyRing::new(&base);
        for (i, t) in moduli.iter().enumerate() {
            if !rx.is_monic(t) || t.degree() == Some(0) {
                return Err(Error::NotMonic(format!(
                    "variable modulus t_{} must be monic of positive degree",
                    i + 1
                )));
            }
            if !is_square_free(&base, t)? {
                return Err(Error::NotSquareFree(format!(
                    "variable modulus t_{} modulo gamma",
                    i + 1
                )));
            }
        }
        let dims: Vec<usize> = moduli.iter().map(|t| t.degree().unwrap()).collect();
        let m: usize = dims.iter().product();
        let s = moduli.len();

        // Exponent tuples in basis order: variable 1 fastest.
        let mut exps: Vec<Vec<u32>> = Vec::with_capacity(m);
        let mut cur = vec![0u32; s];
        for _ in 0..m {
            exps.push(cur.clone());
            for (v, c) in cur.iter_mut().enumerate() {
                *c += 1;
                if (*c as usize) < dims[v] {
                    break;
                }
                *c = 0;
            }
        }

        // Per-variable power tables x_v^j mod t_v for j < 2 dims[v] - 1.
        let mut pow_tables: Vec<Vec<Vec<ChainElem>>> = Vec::with_capacity(s);
        for (v, t) in moduli.iter().enumerate() {
            let mv = dims[v];
            let mut table: Vec<Vec<ChainElem>> = Vec::with_capacity(2 * mv - 1);
            let mut unit = vec![base.zero(); mv];
            unit[0] = base.one();
            table.push(unit);
            // Reduction of x^mv: the negated lower coefficients of t_v.
            let red: Vec<ChainElem> =
                (0..mv).map(|i| base.neg(&rx.coeff(t, i))).collect();
            for j in 1..2 * mv - 1 {
                let prev = &table[j - 1];
                let top = prev[mv - 1].clone();
                let mut nxt = vec![base.zero(); mv];
                for i in (1..mv).rev() {
                    nxt[i] = prev[i - 1].clone();
                }
                if !base.is_zero(&top) {
                    for i in 0..mv {
                        let add = base.mul(&top, &red[i]);
                        nxt[i] = base.add(&nxt[i], &add);
                    }
                }
                table.push(nxt);
            }
            pow_tables.push(table);
        }

        // Basis product table via the tensor structure.
        let mut basis_mul: Vec<Vec<SerialElem>> = vec![vec![Vec::new(); m]; m];
        for i in 0..m {
            for j in 0..=i {
                let mut per_var: Vec<&[ChainElem]> = Vec::with_capacity(s);
                for v in 0..s {
                    let w = (exps[i][v] + exps[j][v]) as usize;
                    per_var.push(&pow_tables[v][w]);
                }
                let prod = tensor_combine(&base, &dims, &per_var, m);
                basis_mul[i][j] = prod.clone();
                basis_mul[j][i] = prod;
            }
        }

        let mut warnings = Vec::new();
        if base.e() > 1 && s >= 1 {
            let all_x2_minus_1 = moduli.iter().all(|t| {
                t.degree() == Some(2)
                    && rx.coeff(t, 0) == base.from_i64(-1)
                    && base.is_zero(&rx.coeff(t, 1))
            });
            if all_x2_minus_1 {
                // Sign-pattern idempotents for x_i^2 - 1 carry the scalar
                // 2^-s, which must be inverted modulo p^e, not just modulo p.
                let two_s = base.pow_u64(&base.from_i64(2), s as u64);
                let inv_pe = base.invert(&two_s)?.coeffs()[0];
                let inv_p = {
                    let rbar = base.residue_field();
                    rbar.invert(&base.residue(&two_s))?.coeffs()[0]
                };
                if inv_pe != inv_p {
                    warnings.push(format!(
                        "idempotent scalars for moduli x_i^2 - 1 are 2^-{s} taken modulo \
                         p^e = {}: here {}, not the mod-p inverse {}; sign-pattern \
                         idempotents built with the mod-p value are not idempotent when e > 1",
                        base.pe(),
                        inv_pe,
                        inv_p
                    ));
                }
            }
        }

        let mut ring = SerialRing {
            base,
            moduli,
            dims,
            m,
            exps,
            basis_mul,
            components: Vec::new(),
            warnings,
        };
        ring.components = decompose_components(&ring)?;
        Ok(ring)
    }

    pub fn base(&self) -> &ChainRing {
        &self.base
    }

    pub fn moduli(&self) -> &[Poly<ChainRing>] {
        &self.moduli
    }

    pub fn num_vars(&self) -> usize {
        self.moduli.len()
    }

    /// R-rank `m` of the ring: the length of element coefficient vectors.
    pub fn dim(&self) -> usize {
        self.m
    }

    /// Exponent tuple of a basis index.
    pub fn exps(&self, idx: usize) -> &[u32] {
        &self.exps[idx]
    }

    pub fn size(&self) -> BigUint {
        self.base.size().pow(self.m as u32)
    }

    /// Construction-time advisories (not errors).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Chain components, sorted by idempotent coefficient vector.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Number of elements of a component: |R|^D.
    pub fn component_size(&self, ci: usize) -> BigUint {
        self.base.size().pow(self.components[ci].residue_degree as u32)
    }

    /// The generator `x_v` as a ring element.
    pub fn var_gen(&self, v: usize) -> SerialElem {
        self.var_pow(v, 1)
    }

    /// The basis monomial `x_v^k` for `k < deg t_v`.
    pub fn var_pow(&self, v: usize, k: usize) -> SerialElem {
        assert!(k < self.dims[v], "monomial exponent out of basis range");
        let mut exp = vec![0u32; self.moduli.len()];
        exp[v] = k as u32;
        let idx = self.flat_index(&exp);
        let mut out = self.zero();
        out[idx] = self.base.one();
        out
    }

    fn flat_index(&self, exp: &[u32]) -> usize {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (v, &a) in exp.iter().enumerate() {
            idx += a as usize * stride;
            stride *= self.dims[v];
        }
        idx
    }

    /// Embeds a base-ring element as a constant.
    pub fn elem_from_chain(&self, c: &ChainElem) -> SerialElem {
        let mut out = self.zero();
        out[0] = c.clone();
        out
    }

    /// Builds an element from explicit basis coefficients.
    pub fn elem_from_coeffs(&self, coeffs: Vec<ChainElem>) -> Result<SerialElem> {
        if coeffs.len() != self.m {
            return Err(Error::InvalidInput(format!(
                "element has {} coefficients, ring rank is {}",
                coeffs.len(),
                self.m
            )));
        }
        Ok(coeffs)
    }

    /// Scalar multiplication by a base-ring element.
    pub fn scale(&self, u: &SerialElem, c: &ChainElem) -> SerialElem {
        u.iter().map(|x| self.base.mul(x, c)).collect()
    }

    /// Coefficient vector reduced to the residue field (a row over `F_q`).
    pub fn coords_residue(&self, u: &SerialElem) -> Vec<ChainElem> {
        u.iter().map(|x| self.base.residue(x)).collect()
    }

    /// Multiplication matrix of `u`: row `a` holds the coefficients of
    /// `basis_a * u`, so `coords(w u) = coords(w) * rep_matrix(u)`.
    pub fn rep_matrix(&self, u: &SerialElem) -> Mat {
        let rows: Vec<Vec<ChainElem>> = (0..self.m)
            .map(|a| {
                let mut acc = self.zero();
                for (j, c) in u.iter().enumerate() {
                    if self.base.is_zero(c) {
                        continue;
                    }
                    for (k, basis_c) in self.basis_mul[a][j].iter().enumerate() {
                        if self.base.is_zero(basis_c) {
                            continue;
                        }
                        let add = self.base.mul(c, basis_c);
                        acc[k] = self.base.add(&acc[k], &add);
                    }
                }
                acc
            })
            .collect();
        Mat::from_rows(&self.base, rows, self.m)
    }

    /// Projection onto a component: multiplication by its idempotent.
    pub fn comp_project(&self, ci: usize, u: &SerialElem) -> SerialElem {
        self.mul(u, &self.components[ci].idempotent)
    }

    /// Field coordinates of the residue of `u`'s component projection:
    /// the inverse of [`SerialRing::comp_from_field`] modulo gamma.
    pub fn comp_to_field(&self, ci: usize, u: &SerialElem) -> Vec<ChainElem> {
        let comp = &self.components[ci];
        let ue = self.mul(u, &comp.idempotent);
        let coords = self.coords_residue(&ue);
        let rbar = self.base.residue_field();
        solve_in_span(&rbar, &comp.coord, &coords)
            .expect("component residues lie in the theta-power span")
    }

    /// Lift of a field element into the component: sum of
    /// `lift(c_j) * theta^j`.
    pub fn comp_from_field(&self, ci: usize, c: &[ChainElem]) -> SerialElem {
        let comp = &self.components[ci];
        assert_eq!(c.len(), comp.residue_degree, "field coordinate length");
        let mut out = self.zero();
        for (j, cj) in c.iter().enumerate() {
            if self.base.is_zero(cj) {
                continue;
            }
            let lifted = self.base.lift(cj);
            let term = self.scale(&comp.theta_pows[j], &lifted);
            out = self.add(&out, &term);
        }
        out
    }

    /// Whether `u`'s image in the component is a unit there.
    pub fn comp_is_unit(&self, ci: usize, u: &SerialElem) -> bool {
        let f = &self.components[ci].field;
        !f.is_zero(&self.comp_to_field(ci, u))
    }

    /// Inverse of `u` within the component: `v` in `eps S` with
    /// `u v = eps`. `NonUnit` when the image is not a component unit.
    pub fn comp_invert(&self, ci: usize, u: &SerialElem) -> Result<SerialElem> {
        let comp = &self.components[ci];
        let f = &comp.field;
        let ubar = self.comp_to_field(ci, u);
        if f.is_zero(&ubar) {
            return Err(Error::NonUnit(format!(
                "element is zero in component {ci} of {}",
                self.describe()
            )));
        }
        let vbar = f.invert(&ubar)?;
        let mut v = self.comp_from_field(ci, &vbar);
        let eps = &comp.idempotent;
        let two_eps = self.add(eps, eps);
        for _ in 0..64 {
            let uv = self.mul(u, &v);
            if uv == *eps {
                return Ok(v);
            }
            v = self.mul(&v, &self.sub(&two_eps, &uv));
        }
        Err(Error::Internal("component inverse iteration did not converge".into()))
    }

    /// Number of orbits of the joint root tuples of the residue moduli under
    /// the simultaneous Frobenius `nu -> nu^(q^power)`.
    ///
    /// This is an independent route to the component count (for `power` = 1):
    /// it enumerates the root tuples in an explicit splitting field instead
    /// of refining idempotents.
    pub fn frobenius_orbit_count(&self, power: u32) -> Result<OrbitCounts> {
        assert!(power >= 1);
        let rbar = self.base.residue_field();
        if self.moduli.is_empty() {
            return Ok(OrbitCounts { count: 1, orbit_sizes: vec![1], splitting_degree: 1 });
        }
        // Splitting field degree: lcm of all residue factor degrees.
        let mut l: usize = 1;
        let mut residue_moduli = Vec::new();
        for t in &self.moduli {
            let tbar = crate::factor::residue_poly(&self.base, t);
            for f in factor_over_field(&rbar, &tbar)? {
                l = num_integer::lcm(l, f.degree().unwrap());
            }
            residue_moduli.push(tbar);
        }
        // Lexicographically smallest monic irreducible of degree l over F_q.
        let splitting = find_irreducible(&rbar, l)?;
        let big = FieldExt::new(rbar.clone(), splitting)?;
        let fx = PolyRing::new(&big);
        // Roots of each modulus inside the splitting field.
        let mut roots: Vec<Vec<Vec<ChainElem>>> = Vec::new();
        for tbar in &residue_moduli {
            let over_big = fx.from_coeffs(
                tbar.coeffs().iter().map(|c| big.from_base(c)).collect(),
            );
            let factors = factor_over_field(&big, &over_big)?;
            let mut var_roots = Vec::new();
            for f in factors {
                if f.degree() != Some(1) {
                    return Err(Error::Internal(
                        "modulus does not split in its splitting field".into(),
                    ));
                }
                var_roots.push(big.neg(&f.coeffs()[0]));
            }
            roots.push(var_roots);
        }
        // Orbits of root tuples under the simultaneous power-q^power map.
        let frob_exp = rbar.size().pow(power);
        let mut seen: HashSet<Vec<Vec<ChainElem>>> = HashSet::new();
        let mut orbit_sizes = Vec::new();
        let mut tuple_idx = vec![0usize; roots.len()];
        loop {
            let tuple: Vec<Vec<ChainElem>> =
                tuple_idx.iter().enumerate().map(|(v, &i)| roots[v][i].clone()).collect();
            if !seen.contains(&tuple) {
                let mut orbit = Vec::new();
                let mut cur = tuple.clone();
                loop {
                    orbit.push(cur.clone());
                    seen.insert(cur.clone());
                    cur = cur.iter().map(|r| big.pow_big(r, &frob_exp)).collect();
                    if cur == tuple {
                        break;
                    }
                }
                orbit_sizes.push(orbit.len());
            }
            // Next tuple.
            let mut v = 0;
            loop {
                if v == roots.len() {
                    orbit_sizes.sort_unstable();
                    return Ok(OrbitCounts {
                        count: orbit_sizes.len(),
                        orbit_sizes,
                        splitting_degree: l,
                    });
                }
                tuple_idx[v] += 1;
                if tuple_idx[v] < roots[v].len() {
                    break;
                }
                tuple_idx[v] = 0;
                v += 1;
            }
        }
    }
}

/// Combines per-variable coefficient vectors into the flat tensor basis.
fn tensor_combine(
    base: &ChainRing,
    dims: &[usize],
    per_var: &[&[ChainElem]],
    m: usize,
) -> SerialElem {
    let s = dims.len();
    let mut out = vec![base.zero(); m];
    let mut idx = vec![0usize; s];
    let mut flat = 0usize;
    loop {
        let mut c = base.one();
        for v in 0..s {
            c = base.mul(&c, &per_var[v][idx[v]]);
        }
        out[flat] = c;
        // Advance the multi-index; flat tracks it (variable 1 fastest).
        let mut v = 0;
        let mut stride = 1usize;
        loop {
            if v == s {
                return out;
            }
            idx[v] += 1;
            flat += stride;
            if idx[v] < dims[v] {
                break;
            }
            flat -= idx[v] * stride;
            idx[v] = 0;
            stride *= dims[v];
            v += 1;
        }
    }
}

impl Ring for SerialRing {
    type Elem = SerialElem;

    fn zero(&self) -> SerialElem {
        vec![self.base.zero(); self.m]
    }

    fn one(&self) -> SerialElem {
        let mut out = self.zero();
        out[0] = self.base.one();
        out
    }

    fn from_i64(&self, n: i64) -> SerialElem {
        self.elem_from_chain(&self.base.from_i64(n))
    }

    fn add(&self, a: &SerialElem, b: &SerialElem) -> SerialElem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn neg(&self, a: &SerialElem) -> SerialElem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &SerialElem, b: &SerialElem) -> SerialElem {
        let mut out = self.zero();
        for (i, ca) in a.iter().enumerate() {
            if self.base.is_zero(ca) {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if self.base.is_zero(cb) {
                    continue;
                }
                let c = self.base.mul(ca, cb);
                for (k, basis_c) in self.basis_mul[i][j].iter().enumerate() {
                    if self.base.is_zero(basis_c) {
                        continue;
                    }
                    let add = self.base.mul(&c, basis_c);
                    out[k] = self.base.add(&out[k], &add);
                }
            }
        }
        out
    }

    fn is_zero(&self, a: &SerialElem) -> bool {
        a.iter().all(|x| self.base.is_zero(x))
    }

    fn is_unit(&self, a: &SerialElem) -> bool {
        (0..self.components.len()).all(|ci| self.comp_is_unit(ci, a))
    }

    fn invert(&self, a: &SerialElem) -> Result<SerialElem> {
        // Solve w * rep_matrix(a) = coords(1) exactly over R.
        let rep = self.rep_matrix(a);
        let h = howell_with_witness(&self.base, &rep);
        match solve_in_span(&self.base, &h, &self.one()) {
            Some(w) => Ok(w),
            None => Err(Error::NonUnit(format!("element of {}", self.describe()))),
        }
    }

    fn is_field(&self) -> bool {
        self.base.is_field() && self.m == 1
    }

    fn describe(&self) -> String {
        if self.moduli.is_empty() {
            return self.base.describe();
        }
        let vars: Vec<String> = (1..=self.moduli.len()).map(|i| format!("x{i}")).collect();
        let degs: Vec<String> = self.dims.iter().map(|d| format!("deg {d}")).collect();
        format!(
            "{}[{}]/({})",
            self.base.describe(),
            vars.join(","),
            degs.join(",")
        )
    }
}

/// Iterative construction of the chain components; see the module docs.
fn decompose_components(ring: &SerialRing) -> Result<Vec<Component>> {
    let rbar = ring.base.residue_field();
    let bx = PolyRing::new(&rbar);
    let trivial_field = FieldExt::new(rbar.clone(), bx.x())?;
    let one_bar = Mat::from_rows(&rbar, vec![ring.coords_residue(&ring.one())], ring.dim());
    let mut comps = vec![Component {
        idempotent: ring.one(),
        residue_degree: 1,
        field: trivial_field,
        theta: ring.zero(),
        theta_pows: vec![ring.one()],
        coord: howell_with_witness(&rbar, &one_bar),
    }];

    for v in 0..ring.num_vars() {
        let mut pieces: Vec<(SerialElem, usize)> = Vec::new();
        for comp in &comps {
            let fx = PolyRing::new(&comp.field);
            let tbar = fx.from_coeffs(
                ring.moduli[v]
                    .coeffs()
                    .iter()
                    .map(|c| comp.field.from_base(&ring.base.residue(c)))
                    .collect(),
            );
            // Square-free over F_q stays square-free over extensions, so this
            // cannot report NotSquareFree for a validated ring.
            let factors = factor_over_field(&comp.field, &tbar)?;
            for g in &factors {
                let (cof, rem) = fx.divmod(&tbar, g)?;
                debug_assert!(rem.is_zero());
                let (unit_g, _, w) = fx.ext_gcd(g, &cof)?;
                if unit_g.degree() != Some(0) {
                    return Err(Error::Internal("factors of a square-free modulus are coprime".into()));
                }
                let ebar = fx.mulmod(&w, &cof, &tbar)?;
                // Map the Bezout idempotent into S: field coefficients lift
                // through the component, x_v-powers are basis monomials.
                let mut eps = ring.zero();
                for (u, coef) in ebar.coeffs().iter().enumerate() {
                    if comp.field.is_zero(coef) {
                        continue;
                    }
                    let lifted = comp_from_field_raw(ring, comp, coef);
                    let term = ring.mul(&lifted, &ring.var_pow(v, u));
                    eps = ring.add(&eps, &term);
                }
                let eps = refine_idempotent(ring, eps)?;
                pieces.push((eps, comp.residue_degree * g.degree().unwrap()));
            }
        }
        comps = pieces
            .into_iter()
            .map(|(eps, d)| build_component(ring, eps, d))
            .collect::<Result<Vec<_>>>()?;
    }

    comps.sort_by(|a, b| a.idempotent.cmp(&b.idempotent));
    // Structural verification: a complete orthogonal system of idempotents.
    let mut sum = ring.zero();
    for (i, a) in comps.iter().enumerate() {
        if ring.is_zero(&a.idempotent) {
            return Err(Error::Internal("zero component idempotent".into()));
        }
        if ring.mul(&a.idempotent, &a.idempotent) != a.idempotent {
            return Err(Error::Internal("component idempotent is not idempotent".into()));
        }
        sum = ring.add(&sum, &a.idempotent);
        for b in &comps[i + 1..] {
            if !ring.is_zero(&ring.mul(&a.idempotent, &b.idempotent)) {
                return Err(Error::Internal("component idempotents are not orthogonal".into()));
            }
        }
    }
    if sum != ring.one() {
        return Err(Error::Internal("component idempotents do not sum to 1".into()));
    }
    Ok(comps)
}

/// `comp_from_field` without going through the ring's component list (used
/// during construction when the component is not yet registered).
fn comp_from_field_raw(ring: &SerialRing, comp: &Component, c: &[ChainElem]) -> SerialElem {
    let mut out = ring.zero();
    for (j, cj) in c.iter().enumerate() {
        if ring.base().is_zero(cj) {
            continue;
        }
        let lifted = ring.base().lift(cj);
        let term = ring.scale(&comp.theta_pows[j], &lifted);
        out = ring.add(&out, &term);
    }
    out
}

/// `eps <- 3 eps^2 - 2 eps^3` until exactly idempotent.
fn refine_idempotent(ring: &SerialRing, mut eps: SerialElem) -> Result<SerialElem> {
    let three = ring.from_i64(3);
    let two = ring.from_i64(2);
    for _ in 0..64 {
        let sq = ring.mul(&eps, &eps);
        if sq == eps {
            if ring.is_zero(&eps) {
                return Err(Error::Internal("idempotent refinement collapsed to zero".into()));
            }
            return Ok(eps);
        }
        let cube = ring.mul(&sq, &eps);
        eps = ring.sub(&ring.mul(&three, &sq), &ring.mul(&two, &cube));
    }
    Err(Error::Internal("idempotent refinement did not converge".into()))
}

/// Attaches residue-field data to a freshly built idempotent: finds a
/// generator `theta` of the component residue field (deterministic search),
/// its minimal polynomial `mu`, and the coordinate solver.
fn build_component(ring: &SerialRing, eps: SerialElem, d: usize) -> Result<Component> {
    let rbar = ring.base().residue_field();
    let bx = PolyRing::new(&rbar);
    if d == 1 {
        let field = FieldExt::new(rbar.clone(), bx.x())?;
        let rows = Mat::from_rows(&rbar, vec![ring.coords_residue(&eps)], ring.dim());
        return Ok(Component {
            residue_degree: 1,
            field,
            theta: ring.zero(),
            theta_pows: vec![eps.clone()],
            coord: howell_with_witness(&rbar, &rows),
            idempotent: eps,
        });
    }
    let q: u64 = rbar.size().try_into().map_err(|_| {
        Error::BudgetExceeded("residue field too large for component generator search".into())
    })?;
    // Deterministic candidate stream: mixed-radix digits over F_q, one digit
    // per ring coordinate, coordinate 0 fastest.
    let mut digits = vec![0u64; ring.dim()];
    'candidates: for _ in 0..1_000_000u64 {
        // Advance first: the all-zero candidate cannot generate.
        let mut v = 0;
        loop {
            if v == digits.len() {
                break 'candidates;
            }
            digits[v] += 1;
            if digits[v] < q {
                break;
            }
            digits[v] = 0;
            v += 1;
        }
        let w: SerialElem = digits.iter().map(|&idx| rbar.elem_by_index(idx)).collect();
        // Powers eps * w^j, tracked exactly in S; their residues must be
        // F_q-independent up to j = d - 1 and close at j = d.
        let mut rows: Vec<Vec<ChainElem>> = vec![ring.coords_residue(&eps)];
        let mut pw = eps.clone();
        for j in 1..=d {
            pw = ring.mul(&pw, &w);
            let coords = ring.coords_residue(&pw);
            let form = howell(&rbar, &Mat::from_rows(&rbar, rows.clone(), ring.dim()));
            let member = span_member(&rbar, &form, &coords);
            if member {
                if j < d {
                    continue 'candidates; // minimal polynomial too small
                }
                // Found: read off mu from the dependency at j = d.
                let mat = Mat::from_rows(&rbar, rows.clone(), ring.dim());
                let wit_form = howell_with_witness(&rbar, &mat);
                let lam = solve_in_span(&rbar, &wit_form, &coords)
                    .expect("membership was just established");
                let mut mu_coeffs: Vec<ChainElem> = lam.iter().map(|c| rbar.neg(c)).collect();
                mu_coeffs.push(rbar.one());
                let mu = bx.from_coeffs(mu_coeffs);
                let field = FieldExt::new(rbar.clone(), mu)?;
                let theta = ring.mul(&w, &eps);
                let mut theta_pows = vec![eps.clone()];
                for _ in 1..d {
                    let last = theta_pows.last().unwrap();
                    theta_pows.push(ring.mul(last, &theta));
                }
                let coord_mat = Mat::from_rows(
                    &rbar,
                    theta_pows.iter().map(|tp| ring.coords_residue(tp)).collect(),
                    ring.dim(),
                );
                return Ok(Component {
                    residue_degree: d,
                    field,
                    theta,
                    theta_pows,
                    coord: howell_with_witness(&rbar, &coord_mat),
                    idempotent: eps,
                });
            }
            rows.push(coords);
        }
        // Minimal polynomial degree exceeded d: impossible inside the
        // component, so the membership at j = d must have closed.
        return Err(Error::Internal("component generator powers did not close".into()));
    }
    Err(Error::Internal("component generator search exhausted".into()))
}

/// Lexicographically smallest monic irreducible of degree `l` over a field.
fn find_irreducible(field: &ChainRing, l: usize) -> Result<Poly<ChainRing>> {
    let px = PolyRing::new(field);
    if l == 1 {
        return Ok(px.x());
    }
    let q: u64 = field.size().try_into().map_err(|_| {
        Error::BudgetExceeded("residue field too large for irreducible search".into())
    })?;
    let mut digits = vec![0u64; l];
    loop {
        let mut coeffs: Vec<ChainElem> =
            digits.iter().map(|&c| field.elem_by_index(c)).collect();
        coeffs.push(field.one());
        let cand = px.from_coeffs(coeffs);
        if poly_is_irreducible(field, &cand) {
            return Ok(cand);
        }
        // Lex order with the constant coefficient most significant.
        let mut i = l;
        loop {
            assert!(i > 0, "irreducible polynomials of every degree exist");
            i -= 1;
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
        }
    }
}
