use exact_kernel::rref::{solve, solve_with_certificate, RankCertificate};
use exact_kernel::{FieldSpec, LinearMap};
use num_traits::Zero;

use crate::report::Report;
use crate::util::{map_space_matrix, vec_of};
use crate::HopfError;

/// A finite-dimensional algebra by structure constants:
/// `mul(e_i ⊗ e_j) = Σ_k μ_{ij}^k e_k` with the row-major tensor order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraFD {
    dim: usize,
    mul: LinearMap,
    unit: LinearMap,
}

impl AlgebraFD {
    pub fn new(dim: usize, mul: LinearMap, unit: LinearMap) -> Result<Self, HopfError> {
        if mul.rows() != dim || mul.cols() != dim * dim {
            return Err(HopfError::Shape(format!(
                "mul must be {}x{}, got {}x{}",
                dim,
                dim * dim,
                mul.rows(),
                mul.cols()
            )));
        }
        if unit.rows() != dim || unit.cols() != 1 {
            return Err(HopfError::Shape(format!(
                "unit must be {}x1, got {}x{}",
                dim,
                unit.rows(),
                unit.cols()
            )));
        }
        if mul.field() != unit.field() {
            return Err(HopfError::Shape("mul/unit field mismatch".into()));
        }
        Ok(AlgebraFD { dim, mul, unit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.mul.field()
    }

    pub fn mul(&self) -> &LinearMap {
        &self.mul
    }

    pub fn unit(&self) -> &LinearMap {
        &self.unit
    }

    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let id = LinearMap::identity(self.dim, self.field());
        let assoc_l = self.mul.compose(&self.mul.tensor(&id).unwrap()).unwrap();
        let assoc_r = self.mul.compose(&id.tensor(&self.mul).unwrap()).unwrap();
        report.push_eq("assoc", &assoc_l, &assoc_r);
        let unit_l = self.mul.compose(&self.unit.tensor(&id).unwrap()).unwrap();
        report.push_eq("unit-left", &unit_l, &id);
        let unit_r = self.mul.compose(&id.tensor(&self.unit).unwrap()).unwrap();
        report.push_eq("unit-right", &unit_r, &id);
        report
    }

    /// Left-multiplication matrix of the `i`-th basis element.
    pub fn left_mul(&self, i: usize) -> LinearMap {
        LinearMap::from_fn(self.dim, self.dim, self.field(), |k, j| {
            self.mul.at(k, i * self.dim + j).clone()
        })
    }

    /// Opposite algebra: multiplication precomposed with the tensor swap.
    pub fn opposite(&self) -> AlgebraFD {
        let swap = LinearMap::tensor_swap(self.dim, self.dim, self.field());
        AlgebraFD {
            dim: self.dim,
            mul: self.mul.compose(&swap).unwrap(),
            unit: self.unit.clone(),
        }
    }
}

/// A finite-dimensional coalgebra by structure constants:
/// `comul(e_i) = Σ_{jk} Δ_i^{jk} e_j ⊗ e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoalgebraFD {
    dim: usize,
    comul: LinearMap,
    counit: LinearMap,
}

impl CoalgebraFD {
    pub fn new(dim: usize, comul: LinearMap, counit: LinearMap) -> Result<Self, HopfError> {
        if comul.rows() != dim * dim || comul.cols() != dim {
            return Err(HopfError::Shape(format!(
                "comul must be {}x{}, got {}x{}",
                dim * dim,
                dim,
                comul.rows(),
                comul.cols()
            )));
        }
        if counit.rows() != 1 || counit.cols() != dim {
            return Err(HopfError::Shape(format!(
                "counit must be 1x{}, got {}x{}",
                dim,
                counit.rows(),
                counit.cols()
            )));
        }
        if comul.field() != counit.field() {
            return Err(HopfError::Shape("comul/counit field mismatch".into()));
        }
        Ok(CoalgebraFD { dim, comul, counit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.comul.field()
    }

    pub fn comul(&self) -> &LinearMap {
        &self.comul
    }

    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }

    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let id = LinearMap::identity(self.dim, self.field());
        let coassoc_l = self.comul.tensor(&id).unwrap().compose(&self.comul).unwrap();
        let coassoc_r = id.tensor(&self.comul).unwrap().compose(&self.comul).unwrap();
        report.push_eq("coassoc", &coassoc_l, &coassoc_r);
        let counit_l = self
            .counit
            .tensor(&id)
            .unwrap()
            .compose(&self.comul)
            .unwrap();
        report.push_eq("counit-left", &counit_l, &id);
        let counit_r = id
            .tensor(&self.counit)
            .unwrap()
            .compose(&self.comul)
            .unwrap();
        report.push_eq("counit-right", &counit_r, &id);
        report
    }
}

/// A bialgebra: compatible algebra and coalgebra structures on one space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BialgebraFD {
    algebra: AlgebraFD,
    coalgebra: CoalgebraFD,
}

impl BialgebraFD {
    pub fn new(algebra: AlgebraFD, coalgebra: CoalgebraFD) -> Result<Self, HopfError> {
        if algebra.dim() != coalgebra.dim() {
            return Err(HopfError::Shape(format!(
                "algebra dim {} vs coalgebra dim {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        if algebra.field() != coalgebra.field() {
            return Err(HopfError::Shape("algebra/coalgebra field mismatch".into()));
        }
        Ok(BialgebraFD { algebra, coalgebra })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn algebra(&self) -> &AlgebraFD {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraFD {
        &self.coalgebra
    }

    pub fn mul(&self) -> &LinearMap {
        self.algebra.mul()
    }

    pub fn unit(&self) -> &LinearMap {
        self.algebra.unit()
    }

    pub fn comul(&self) -> &LinearMap {
        self.coalgebra.comul()
    }

    pub fn counit(&self) -> &LinearMap {
        self.coalgebra.counit()
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.dim(), self.field())
    }
}

/// Runs the full named check list for a bialgebra: algebra laws, coalgebra
/// laws, and the compatibility axioms making comul and counit algebra maps.
pub fn validate_bialgebra(b: &BialgebraFD) -> Report {
    let mut report = Report::new();
    let n = b.dim();
    let field = b.field();
    let id = b.id();
    report.merge("", b.algebra.validate());
    report.merge("", b.coalgebra.validate());
    // comul multiplicative: comul∘mul = (mul⊗mul)∘(id⊗swap⊗id)∘(comul⊗comul)
    let lhs = b.comul().compose(b.mul()).unwrap();
    let swap = LinearMap::tensor_swap(n, n, field);
    let mid = id.tensor(&swap).unwrap().tensor(&id).unwrap();
    let rhs = b
        .mul()
        .tensor(b.mul())
        .unwrap()
        .compose(&mid)
        .unwrap()
        .compose(&b.comul().tensor(b.comul()).unwrap())
        .unwrap();
    report.push_eq("comul-multiplicative", &lhs, &rhs);
    // counit multiplicative: counit∘mul = counit⊗counit
    let lhs = b.counit().compose(b.mul()).unwrap();
    let rhs = b.counit().tensor(b.counit()).unwrap();
    report.push_eq("counit-multiplicative", &lhs, &rhs);
    // comul of the unit is unit⊗unit
    let lhs = b.comul().compose(b.unit()).unwrap();
    let rhs = b.unit().tensor(b.unit()).unwrap();
    report.push_eq("comul-unit", &lhs, &rhs);
    // counit of the unit is 1
    let lhs = b.counit().compose(b.unit()).unwrap();
    let rhs = LinearMap::identity(1, field);
    report.push_eq("counit-unit", &lhs, &rhs);
    report
}

/// Convolution product `mul ∘ (f ⊗ g) ∘ comul` of maps from a coalgebra to
/// an algebra.
pub fn convolution(
    f: &LinearMap,
    g: &LinearMap,
    c: &CoalgebraFD,
    a: &AlgebraFD,
) -> Result<LinearMap, HopfError> {
    for m in [f, g] {
        if m.cols() != c.dim() || m.rows() != a.dim() {
            return Err(HopfError::Shape(format!(
                "convolution factor must be {}x{}, got {}x{}",
                a.dim(),
                c.dim(),
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(a.mul()
        .compose(&f.tensor(g)?)?
        .compose(c.comul())?)
}

/// The convolution identity `unit ∘ counit`.
pub fn convolution_unit(b: &BialgebraFD) -> LinearMap {
    b.unit().compose(b.counit()).unwrap()
}

/// Result of the antipode search: the solution when the stacked linear
/// system for a two-sided convolution inverse of the identity is solvable,
/// plus the solver's rank certificate either way.
pub struct AntipodeSearch {
    pub antipode: Option<LinearMap>,
    pub certificate: RankCertificate,
}


/// Searches for the antipode: the unique two-sided convolution inverse of
/// the identity, found as one stacked linear system over the entries of `S`.
pub fn find_antipode(b: &BialgebraFD) -> Result<AntipodeSearch, HopfError> {
    let n = b.dim();
    let field = b.field();
    let target = convolution_unit(b);
    let left = map_space_matrix(n, n, field, |s| {
        convolution(s, &b.id(), b.coalgebra(), b.algebra()).unwrap()
    });
    let right = map_space_matrix(n, n, field, |s| {
        convolution(&b.id(), s, b.coalgebra(), b.algebra()).unwrap()
    });
    let stacked = left.vstack(&right)?;
    let rhs = vec_of(&target).vstack(&vec_of(&target))?;
    let (solution, certificate) = solve_with_certificate(&stacked, &rhs)?;
    let antipode = solution.map(|s| {
        LinearMap::new(n, n, field, s.entries().to_vec()).unwrap()
    });
    Ok(AntipodeSearch {
        antipode,
        certificate,
    })
}

/// Flips multiplication and/or comultiplication with the tensor swap.
pub fn op_cop(b: &BialgebraFD, flip_mul: bool, flip_comul: bool) -> BialgebraFD {
    let n = b.dim();
    let swap = LinearMap::tensor_swap(n, n, b.field());
    let mul = if flip_mul {
        b.mul().compose(&swap).unwrap()
    } else {
        b.mul().clone()
    };
    let comul = if flip_comul {
        swap.compose(b.comul()).unwrap()
    } else {
        b.comul().clone()
    };
    BialgebraFD {
        algebra: AlgebraFD::new(n, mul, b.unit().clone()).unwrap(),
        coalgebra: CoalgebraFD::new(n, comul, b.counit().clone()).unwrap(),
    }
}

/// The twisted antipode: the antipode of the co-opposite bialgebra,
/// reinterpreted on the original space.
pub fn find_twisted_antipode(b: &BialgebraFD) -> Result<AntipodeSearch, HopfError> {
    find_antipode(&op_cop(b, false, true))
}

/// A finite monoid as a multiplication table over element names.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonoidTable {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl MonoidTable {
    pub fn new(elements: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, HopfError> {
        let n = elements.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(HopfError::NotAMonoid("table is not square".into()));
        }
        for row in &table {
            for &v in row {
                if v >= n {
                    return Err(HopfError::NotAMonoid(format!(
                        "table entry {v} out of range"
                    )));
                }
            }
        }
        let monoid = MonoidTable { elements, table };
        monoid.identity_index()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if monoid.table[monoid.table[a][b]][c] != monoid.table[a][monoid.table[b][c]] {
                        return Err(HopfError::NotAMonoid(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(monoid)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity_index(&self) -> Result<usize, HopfError> {
        let n = self.order();
        (0..n)
            .find(|&e| (0..n).all(|x| self.table[e][x] == x && self.table[x][e] == x))
            .ok_or_else(|| HopfError::NotAMonoid("no two-sided identity".into()))
    }

    /// The two-element monoid {e, s} with s^2 = s.
    pub fn two_element_idempotent() -> Self {
        MonoidTable::new(vec!["e".into(), "s".into()], vec![vec![0, 1], vec![1, 1]]).unwrap()
    }

    pub fn cyclic(order: usize) -> Self {
        let elements = (0..order).map(|i| format!("g{i}")).collect();
        let table = (0..order)
            .map(|i| (0..order).map(|j| (i + j) % order).collect())
            .collect();
        MonoidTable::new(elements, table).unwrap()
    }

    pub fn trivial() -> Self {
        MonoidTable::new(vec!["e".into()], vec![vec![0]]).unwrap()
    }
}

/// The monoid bialgebra k[S]: basis indexed by the monoid, multiplication
/// from the table, every basis element grouplike.
pub fn monoid_bialgebra(table: &MonoidTable, field: FieldSpec) -> Result<BialgebraFD, HopfError> {
    let n = table.order();
    let mut mul = LinearMap::zero(n, n * n, field);
    for i in 0..n {
        for j in 0..n {
            mul.set(table.table[i][j], i * n + j, field.one());
        }
    }
    let mut unit = LinearMap::zero(n, 1, field);
    unit.set(table.identity_index()?, 0, field.one());
    let mut comul = LinearMap::zero(n * n, n, field);
    for i in 0..n {
        comul.set(i * n + i, i, field.one());
    }
    let counit = LinearMap::from_fn(1, n, field, |_, _| field.one());
    BialgebraFD::new(AlgebraFD::new(n, mul, unit)?, CoalgebraFD::new(n, comul, counit)?)
}

/// Recovers a monoid table from a bialgebra whose basis is grouplike and
/// closed under multiplication, as produced by `monoid_bialgebra`.
pub fn monoid_structure(b: &BialgebraFD) -> Option<MonoidTable> {
    let n = b.dim();
    let one = b.field().one();
    for i in 0..n {
        // grouplike: comul(e_i) = e_i ⊗ e_i, counit(e_i) = 1
        for r in 0..n * n {
            let v = b.comul().at(r, i);
            if r == i * n + i {
                if v != &one {
                    return None;
                }
            } else if !v.is_zero() {
                return None;
            }
        }
        if b.counit().at(0, i) != &one {
            return None;
        }
    }
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut target = None;
            for k in 0..n {
                let v = b.mul().at(k, i * n + j);
                if v.is_zero() {
                    continue;
                }
                if v != &one || target.is_some() {
                    return None;
                }
                target = Some(k);
            }
            table[i][j] = target?;
        }
    }
    let elements = (0..n).map(|i| format!("b{i}")).collect();
    MonoidTable::new(elements, table).ok()
}

/// Sweedler's four-dimensional Hopf algebra with basis {1, g, x, gx}:
/// g² = 1, x² = 0, xg = -gx, Δg = g⊗g, Δx = x⊗1 + g⊗x.
pub fn sweedler_h4(field: FieldSpec) -> Result<BialgebraFD, HopfError> {
    if field.characteristic() == 2 {
        return Err(HopfError::UnsupportedField(
            "Sweedler H4 requires characteristic != 2".into(),
        ));
    }
    let n = 4;
    // signed product table: (index, sign), sign 0 meaning the product is 0
    let products: [[(usize, i64); 4]; 4] = [
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        [(1, 1), (0, 1), (3, 1), (2, 1)],
        [(2, 1), (3, -1), (0, 0), (0, 0)],
        [(3, 1), (2, -1), (0, 0), (0, 0)],
    ];
    let mut mul = LinearMap::zero(n, n * n, field);
    for i in 0..n {
        for j in 0..n {
            let (k, sign) = products[i][j];
            if sign != 0 {
                mul.set(k, i * n + j, field.integer(sign));
            }
        }
    }
    let mut unit = LinearMap::zero(n, 1, field);
    unit.set(0, 0, field.one());
    let mut comul = LinearMap::zero(n * n, n, field);
    // Δ1 = 1⊗1
    comul.set(0, 0, field.one());
    // Δg = g⊗g
    comul.set(1 * n + 1, 1, field.one());
    // Δx = x⊗1 + g⊗x
    comul.set(2 * n + 0, 2, field.one());
    comul.set(1 * n + 2, 2, field.one());
    // Δ(gx) = gx⊗g + 1⊗gx
    comul.set(3 * n + 1, 3, field.one());
    comul.set(0 * n + 3, 3, field.one());
    let mut counit = LinearMap::zero(1, n, field);
    counit.set(0, 0, field.one());
    counit.set(0, 1, field.one());
    BialgebraFD::new(AlgebraFD::new(n, mul, unit)?, CoalgebraFD::new(n, comul, counit)?)
}

/// Characteristic-0 semisimplicity test: nondegeneracy of the trace form
/// of the regular representation.
pub fn is_semisimple_algebra(a: &AlgebraFD) -> Result<bool, HopfError> {
    if a.field().characteristic() != 0 {
        return Err(HopfError::UnsupportedField(
            "trace-form semisimplicity test requires characteristic 0".into(),
        ));
    }
    let n = a.dim();
    let field = a.field();
    let left: Vec<LinearMap> = (0..n).map(|i| a.left_mul(i)).collect();
    let trace_form = LinearMap::from_fn(n, n, field, |i, j| {
        let prod = left[i].compose(&left[j]).unwrap();
        let mut tr = field.zero();
        for d in 0..n {
            tr = field.add(&tr, prod.at(d, d));
        }
        tr
    });
    Ok(exact_kernel::rank(&trace_form) == n)
}

/// Grouplike basis indices: z with Δz = z⊗z and εz = 1.
pub fn grouplike_basis_elements(b: &BialgebraFD) -> Vec<usize> {
    let n = b.dim();
    let one = b.field().one();
    (0..n)
        .filter(|&i| {
            b.counit().at(0, i) == &one
                && (0..n * n).all(|r| {
                    let expected = r == i * n + i;
                    (b.comul().at(r, i) == &one) == expected
                        && (expected || b.comul().at(r, i).is_zero())
                })
        })
        .collect()
}

/// Solves `solve`-style corestriction `through ∘ g = target`.
pub fn factor_through(through: &LinearMap, target: &LinearMap) -> Result<LinearMap, HopfError> {
    solve(through, target)?
        .ok_or_else(|| HopfError::Corestriction("map does not factor through the inclusion".into()))
}
