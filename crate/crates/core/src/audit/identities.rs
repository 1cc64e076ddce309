use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Comparison;
use crate::algorithms::{
    build_table, build_table_with_width, classical_table, closed_form_final_with,
    inverse_transform_check, transform_check, AlgorithmKind, AlgorithmTable, SequenceSpec,
    SeriesPair,
};
use crate::error::Result;
use crate::exact::{classical_falling, factorial_rat, int, BigRat, LambdaPoly};
use crate::numbers::{
    appell_convolution, bell_with, bernoulli_with, classical_bell, classical_bernoulli,
    classical_euler, euler_with, stirling1_table, stirling2_basis_expansion, stirling2_table,
    StirlingTable,
};
use crate::series::{
    apply_weighted_derivation, e_lambda_series, e_lambda_x_series, log_lambda_series,
    stirling2_from_series, TruncatedSeries,
};

const OPERATOR_MAX_ROWS: usize = 6;
const SAMPLE_POINTS: [i64; 3] = [1, 2, -1];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest index for number sequences and tables.
    pub nmax: usize,
    /// Truncation order for series identities.
    pub order: usize,
}

/// Values shared by several identities, computed once per run.
pub(super) struct Context {
    limits: Limits,
    s2: StirlingTable,
    s1: StirlingTable,
    bernoulli: Vec<LambdaPoly>,
    euler: Vec<LambdaPoly>,
    tables: Vec<AlgorithmTable>,
}

impl Context {
    pub(super) fn new(limits: Limits) -> Self {
        let n = limits.nmax;
        let s2 = stirling2_table(n + 1);
        let bernoulli = (0..=n).map(|k| bernoulli_with(&s2, k)).collect();
        let euler = (0..=n).map(|k| euler_with(&s2, k)).collect();
        let tables = KINDS
            .iter()
            .flat_map(|&kind| {
                SequenceSpec::SHIPPED
                    .iter()
                    .map(move |seed| build_table(kind, seed, n).expect("shipped seed"))
            })
            .collect();
        Self {
            limits,
            s1: stirling1_table(n),
            s2,
            bernoulli,
            euler,
            tables,
        }
    }

    fn n(&self) -> usize {
        self.limits.nmax
    }

    fn table(&self, kind: AlgorithmKind, seed: &SequenceSpec) -> &AlgorithmTable {
        self.tables
            .iter()
            .find(|t| t.kind() == kind && t.seed() == seed)
            .expect("context holds every shipped table")
    }

    fn at_one(&self, numbers: &[LambdaPoly]) -> Vec<LambdaPoly> {
        (0..=self.n())
            .map(|k| appell_convolution(numbers, k, &BigRat::one()))
            .collect()
    }
}

type Check = Box<dyn Fn(&Context) -> Result<Vec<Comparison>> + Send + Sync>;

pub(super) struct Identity {
    pub name: String,
    pub range: fn(&Limits) -> String,
    pub run: Check,
}

const KINDS: [AlgorithmKind; 2] = [AlgorithmKind::B, AlgorithmKind::A];

fn upto_n(l: &Limits) -> String {
    format!("n<={}", l.nmax)
}

fn from_one(l: &Limits) -> String {
    format!("1<=n<={}", l.nmax)
}

fn triangle(l: &Limits) -> String {
    format!("0<=k<=n<={}", l.nmax)
}

fn upto_order(l: &Limits) -> String {
    format!("order<={}", l.order)
}

fn table_cells(l: &Limits) -> String {
    format!("n+m<={}", l.nmax)
}

fn operator_rows(l: &Limits) -> String {
    format!("n<={}, order<={}", l.order.min(OPERATOR_MAX_ROWS), l.order)
}

fn identity(name: impl Into<String>, range: fn(&Limits) -> String, run: Check) -> Identity {
    Identity {
        name: name.into(),
        range,
        run,
    }
}

fn sequence_eq(label: &str, left: &[LambdaPoly], right: &[LambdaPoly], start: usize) -> Vec<Comparison> {
    left.iter()
        .zip(right)
        .enumerate()
        .skip(start)
        .map(|(n, (l, r))| Comparison::new(format!("{label} n={n}"), l.clone(), r.clone()))
        .collect()
}

fn series_eq(label: &str, pair: &SeriesPair) -> Vec<Comparison> {
    let order = pair.lhs.order().max(pair.rhs.order());
    (0..=order)
        .map(|k| {
            Comparison::new(
                format!("{label} t^{k}"),
                pair.lhs.coeff(k).clone(),
                pair.rhs.coeff(k).clone(),
            )
        })
        .collect()
}

fn table_eq(label: &str, left: &StirlingTable, right: &StirlingTable) -> Vec<Comparison> {
    let mut out = Vec::new();
    for n in 0..=left.nmax().min(right.nmax()) {
        for k in 0..=n {
            out.push(Comparison::new(
                format!("{label} ({n},{k})"),
                left.entry(n, k).clone(),
                right.entry(n, k).clone(),
            ));
        }
    }
    out
}

fn rat_poly(q: BigRat) -> LambdaPoly {
    LambdaPoly::constant(q)
}

fn sign(n: usize) -> BigRat {
    if n % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn factorial_over_power_of_two(n: usize) -> BigRat {
    factorial_rat(n) / BigRat::from_integer(BigInt::one() << n)
}

/// `Σ_k S_{1,λ}(n,k)·values[k]` for `n = 0..=nmax`.
fn stirling1_transform(s1: &StirlingTable, values: &[LambdaPoly]) -> Vec<LambdaPoly> {
    (0..=s1.nmax())
        .map(|n| (0..=n).map(|k| s1.entry(n, k) * &values[k]).sum())
        .collect()
}

/// The registered identities, in report order.
pub(super) fn registry() -> Vec<Identity> {
    let mut out: Vec<Identity> = vec![
        identity(
            "stirling2: recurrence = series extraction = basis expansion",
            upto_n,
            Box::new(|ctx| {
                let rec = stirling2_table(ctx.n());
                let mut c = table_eq("recurrence vs series", &rec, &stirling2_from_series(ctx.n()));
                c.extend(table_eq(
                    "recurrence vs basis",
                    &rec,
                    &stirling2_basis_expansion(ctx.n()),
                ));
                Ok(c)
            }),
        ),
        identity(
            "lambda=0 limit vs classical B_n",
            upto_n,
            Box::new(|ctx| {
                let classical: Vec<LambdaPoly> =
                    classical_bernoulli(ctx.n()).into_iter().map(rat_poly).collect();
                let limit: Vec<LambdaPoly> =
                    ctx.bernoulli.iter().map(|b| b.substitute(&int(0))).collect();
                Ok(sequence_eq("B", &limit, &classical, 0))
            }),
        ),
        identity(
            "lambda=0 limit vs classical E_n",
            upto_n,
            Box::new(|ctx| {
                let classical: Vec<LambdaPoly> =
                    classical_euler(ctx.n()).into_iter().map(rat_poly).collect();
                let limit: Vec<LambdaPoly> =
                    ctx.euler.iter().map(|e| e.substitute(&int(0))).collect();
                Ok(sequence_eq("E", &limit, &classical, 0))
            }),
        ),
        identity(
            "lambda=0 limit vs classical Bell_n",
            upto_n,
            Box::new(|ctx| {
                let classical: Vec<LambdaPoly> = classical_bell(ctx.n())
                    .into_iter()
                    .map(|b| rat_poly(BigRat::from_integer(b)))
                    .collect();
                let limit: Vec<LambdaPoly> = (0..=ctx.n())
                    .map(|n| bell_with(&ctx.s2, n, &int(1)).substitute(&int(0)))
                    .collect();
                Ok(sequence_eq("Bell", &limit, &classical, 0))
            }),
        ),
        identity(
            "bernoulli: stirling sum = n!*[t^n] t/(e_lambda(t)-1)",
            upto_n,
            Box::new(|ctx| {
                let n = ctx.n();
                let e = e_lambda_series(n + 1);
                let quotient = TruncatedSeries::new(n, e.coeffs()[1..].to_vec());
                let series = quotient.inverse()?.egf_coefficients();
                Ok(sequence_eq("beta", &ctx.bernoulli, &series, 0))
            }),
        ),
        identity(
            "euler: stirling sum = n!*[t^n] 2/(e_lambda(t)+1)",
            upto_n,
            Box::new(|ctx| {
                let series = euler_generating_function(ctx.n())?.egf_coefficients();
                Ok(sequence_eq("E", &ctx.euler, &series, 0))
            }),
        ),
        identity(
            "euler polynomial: convolution = n!*[t^n] 2e_lambda^x(t)/(e_lambda(t)+1), x in {1,2,-1}",
            upto_n,
            Box::new(|ctx| {
                let n = ctx.n();
                let base = euler_generating_function(n)?;
                let mut out = Vec::new();
                for x in SAMPLE_POINTS.map(int) {
                    let series = (&base * &e_lambda_x_series(&x, n)).egf_coefficients();
                    let conv: Vec<LambdaPoly> =
                        (0..=n).map(|k| appell_convolution(&ctx.euler, k, &x)).collect();
                    out.extend(sequence_eq(&format!("x={x}"), &conv, &series, 0));
                }
                Ok(out)
            }),
        ),
        identity(
            "bell polynomial: stirling sum = n!*[t^n] exp(x(e_lambda(t)-1)), x in {1,2,-1}",
            upto_n,
            Box::new(|ctx| {
                let n = ctx.n();
                let em1 = &e_lambda_series(n) - &TruncatedSeries::one(n);
                let mut out = Vec::new();
                for x in SAMPLE_POINTS.map(int) {
                    let series = em1.scale_rat(&x).exp()?.egf_coefficients();
                    let sums: Vec<LambdaPoly> = (0..=n).map(|k| bell_with(&ctx.s2, k, &x)).collect();
                    out.extend(sequence_eq(&format!("x={x}"), &sums, &series, 0));
                }
                Ok(out)
            }),
        ),
        identity(
            "stirling1 inversion: sum S1(n,k) beta_k = (-1)^n (n-lambda)_n/(n+1)",
            upto_n,
            Box::new(|ctx| {
                let left = stirling1_transform(&ctx.s1, &ctx.bernoulli);
                let right: Vec<LambdaPoly> = (0..=ctx.n())
                    .map(|n| {
                        let top = LambdaPoly::linear(int(n as i64), int(-1));
                        classical_falling(&top, n).scale(&(sign(n) / int(n as i64 + 1)))
                    })
                    .collect();
                Ok(sequence_eq("", &left, &right, 0))
            }),
        ),
        identity(
            "stirling1 inversion: sum S1(n,k) E_k = (-1)^n n!/2^n",
            upto_n,
            Box::new(|ctx| {
                let left = stirling1_transform(&ctx.s1, &ctx.euler);
                let right: Vec<LambdaPoly> = (0..=ctx.n())
                    .map(|n| rat_poly(sign(n) * factorial_over_power_of_two(n)))
                    .collect();
                Ok(sequence_eq("", &left, &right, 0))
            }),
        ),
        identity(
            "stirling1 inversion: sum S1(n,k) beta_k(1) = (lambda+1)(-1)^(n-1) (n-1-lambda)_(n-1)/(n+1)",
            from_one,
            Box::new(|ctx| {
                let left = stirling1_transform(&ctx.s1, &ctx.at_one(&ctx.bernoulli));
                let right: Vec<LambdaPoly> = (0..=ctx.n())
                    .map(|n| {
                        if n == 0 {
                            return LambdaPoly::zero();
                        }
                        let top = LambdaPoly::linear(int(n as i64 - 1), int(-1));
                        let falling = classical_falling(&top, n - 1);
                        (&falling * &LambdaPoly::from_ints(&[1, 1]))
                            .scale(&(sign(n - 1) / int(n as i64 + 1)))
                    })
                    .collect();
                Ok(sequence_eq("", &left, &right, 1))
            }),
        ),
        identity(
            "stirling1 inversion: sum S1(n,k) E_k(1) = (-1)^(n-1) n!/2^n",
            from_one,
            Box::new(|ctx| {
                let left = stirling1_transform(&ctx.s1, &ctx.at_one(&ctx.euler));
                let right: Vec<LambdaPoly> = (0..=ctx.n())
                    .map(|n| rat_poly(-sign(n) * factorial_over_power_of_two(n)))
                    .collect();
                Ok(sequence_eq("", &left, &right, 1))
            }),
        ),
    ];

    for kind in KINDS {
        for seed in SequenceSpec::SHIPPED {
            let name = format!("closed form vs {kind}-recurrence, {}", seed.name());
            out.push(identity(
                name,
                upto_n,
                Box::new(move |ctx| {
                    let recurrence = ctx.table(kind, &seed).final_sequence();
                    let values = seed.values(ctx.n() + 1)?;
                    let closed = (0..=ctx.n())
                        .map(|n| closed_form_final_with(&ctx.s2, kind, &values, n))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(sequence_eq("", &recurrence, &closed, 0))
                }),
            ));
        }
    }

    out.extend([
        named(
            "B-algorithm final sequence, bernoulli_seed = beta_n",
            AlgorithmKind::B,
            SequenceSpec::BernoulliSeed,
            upto_n,
            0,
            |ctx| ctx.bernoulli.clone(),
        ),
        named(
            "B-algorithm final sequence, half_powers = E_n",
            AlgorithmKind::B,
            SequenceSpec::HalfPowers,
            upto_n,
            0,
            |ctx| ctx.euler.clone(),
        ),
        named(
            "B-algorithm final sequence, bell_seed = phi_n",
            AlgorithmKind::B,
            SequenceSpec::BellSeed,
            from_one,
            1,
            |ctx| (0..=ctx.n()).map(|n| bell_with(&ctx.s2, n, &int(1))).collect(),
        ),
        named(
            "A-algorithm final sequence, bernoulli_seed = beta_n(1)",
            AlgorithmKind::A,
            SequenceSpec::BernoulliSeed,
            upto_n,
            0,
            |ctx| ctx.at_one(&ctx.bernoulli),
        ),
        named(
            "A-algorithm final sequence, half_powers = E_n(1)",
            AlgorithmKind::A,
            SequenceSpec::HalfPowers,
            upto_n,
            0,
            |ctx| ctx.at_one(&ctx.euler),
        ),
    ]);

    for kind in KINDS {
        for seed in SequenceSpec::SHIPPED {
            let forward = match kind {
                AlgorithmKind::B => "final EGF = F(1-e_lambda(t))",
                AlgorithmKind::A => "final EGF = e_lambda(t) G(1-e_lambda(t))",
            };
            let seed_fwd = seed.clone();
            out.push(identity(
                format!("transform {forward}, {}", seed.name()),
                upto_order,
                Box::new(move |ctx| {
                    let pair = transform_check(kind, &seed_fwd, ctx.limits.order)?;
                    Ok(series_eq("", &pair))
                }),
            ));
            let inverse = match kind {
                AlgorithmKind::B => "F(t) = final EGF at log_lambda(1-t)",
                AlgorithmKind::A => "(1-t)G(t) = final EGF at log_lambda(1-t)",
            };
            out.push(identity(
                format!("inverse transform {inverse}, {}", seed.name()),
                upto_order,
                Box::new(move |ctx| {
                    let pair = inverse_transform_check(kind, &seed, ctx.limits.order)?;
                    Ok(series_eq("", &pair))
                }),
            ));
        }
    }

    out.push(identity(
        "auxiliary: n!*[t^n] e_lambda(t)(e_lambda(t)-1)^k/k! = {n+1,k+1} + n*lambda*{n,k+1}",
        triangle,
        Box::new(|ctx| {
            let n = ctx.n();
            let e = e_lambda_series(n);
            let em1 = &e - &TruncatedSeries::one(n);
            let mut power = e.clone();
            let mut out = Vec::new();
            for k in 0..=n {
                let inv_k = BigRat::one() / factorial_rat(k);
                for m in k..=n {
                    let left = power.coeff(m).scale(&(factorial_rat(m) * &inv_k));
                    let m_lambda = LambdaPoly::linear(BigRat::zero(), int(m as i64));
                    let right = ctx.s2.entry(m + 1, k + 1) + &(&m_lambda * ctx.s2.entry(m, k + 1));
                    out.push(Comparison::new(format!("({m},{k})"), left, right));
                }
                power = &power * &em1;
            }
            Ok(out)
        }),
    ));

    for kind in KINDS {
        for seed in SequenceSpec::SHIPPED {
            out.push(identity(
                format!("lambda=0 {kind}-table vs classical {kind}-algorithm, {}", seed.name()),
                table_cells,
                Box::new(move |ctx| {
                    let table = ctx.table(kind, &seed);
                    let seed0: Vec<BigRat> =
                        table.rows()[0].iter().map(|v| v.eval_at(&int(0))).collect();
                    let classical = classical_table(kind, &seed0, ctx.n());
                    let mut out = Vec::new();
                    for (n, row) in table.rows().iter().enumerate() {
                        for (m, v) in row.iter().enumerate() {
                            out.push(Comparison::new(
                                format!("({n},{m})"),
                                v.substitute(&int(0)),
                                rat_poly(classical[n][m].clone()),
                            ));
                        }
                    }
                    Ok(out)
                }),
            ));
        }
    }

    out.push(identity(
        "compositional inverse: log_lambda(1+(e_lambda(t)-1)) = t",
        upto_order,
        Box::new(|ctx| {
            let n = ctx.limits.order;
            let em1 = &e_lambda_series(n) - &TruncatedSeries::one(n);
            let pair = SeriesPair {
                lhs: log_lambda_series(n).compose(&em1)?,
                rhs: TruncatedSeries::variable(n),
            };
            Ok(series_eq("", &pair))
        }),
    ));
    out.push(identity(
        "compositional inverse: e_lambda(log_lambda(1+t)) = 1+t",
        upto_order,
        Box::new(|ctx| {
            let n = ctx.limits.order;
            let pair = SeriesPair {
                lhs: e_lambda_series(n).compose(&log_lambda_series(n))?,
                rhs: &TruncatedSeries::one(n) + &TruncatedSeries::variable(n),
            };
            Ok(series_eq("", &pair))
        }),
    ));
    out.push(identity(
        "operator: ((t-1)d/dt)_(n,lambda) f_0 = row n of the B-table",
        operator_rows,
        Box::new(|ctx| {
            let order = ctx.limits.order;
            let rows = order.min(OPERATOR_MAX_ROWS);
            let mut out = Vec::new();
            for seed in SequenceSpec::SHIPPED {
                let f0 = TruncatedSeries::new(order, seed.values(order + 1)?);
                let table = build_table_with_width(AlgorithmKind::B, &seed, rows, order)?;
                for n in 0..=rows {
                    let pair = SeriesPair {
                        lhs: apply_weighted_derivation(&f0, n)?,
                        rhs: table.row_series(n),
                    };
                    out.extend(series_eq(&format!("{} n={n}", seed.name()), &pair));
                }
            }
            Ok(out)
        }),
    ));

    out
}

fn named(
    name: &str,
    kind: AlgorithmKind,
    seed: SequenceSpec,
    range: fn(&Limits) -> String,
    start: usize,
    expected: fn(&Context) -> Vec<LambdaPoly>,
) -> Identity {
    identity(
        name,
        range,
        Box::new(move |ctx| {
            let finals = ctx.table(kind, &seed).final_sequence();
            Ok(sequence_eq("", &finals, &expected(ctx), start))
        }),
    )
}

/// `2/(e_λ(t)+1)`
fn euler_generating_function(order: usize) -> Result<TruncatedSeries> {
    let half_sum = (&e_lambda_series(order) + &TruncatedSeries::one(order)).scale_rat(&BigRat::new(1.into(), 2.into()));
    half_sum.inverse()
}

/// Names of all registered identities, in report order.
pub fn identity_names() -> Vec<String> {
    registry().into_iter().map(|i| i.name).collect()
}
