//! Small expression language for flows, output maps, guards and resets.
//!
//! Automata are described as data rather than closures so that definitions can
//! be validated against their declared symbols, shared across threads and
//! printed back as human-readable guard labels.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::hybrid::noise::NoiseSource;
use crate::scalar::Scalar;

/// Namespace of a symbol referenced from an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolKind {
    State,
    Input,
    Param,
}

impl fmt::Display for SymbolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolKind::State => "state variable",
            SymbolKind::Input => "input port",
            SymbolKind::Param => "parameter",
        })
    }
}

/// Resolves symbol names during evaluation.
pub trait Scope<T> {
    fn lookup(&self, kind: SymbolKind, name: &str) -> Option<T>;
}

/// Symbol that a scope could not resolve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnresolvedSymbol {
    pub kind: SymbolKind,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr<T> {
    Const(T),
    Symbol(SymbolKind, String),
    /// Fresh zero-mean Gaussian draw with the given standard deviation.
    Noise(Box<Expr<T>>),
    Add(Box<Expr<T>>, Box<Expr<T>>),
    Sub(Box<Expr<T>>, Box<Expr<T>>),
    Mul(Box<Expr<T>>, Box<Expr<T>>),
    Neg(Box<Expr<T>>),
    Max(Box<Expr<T>>, Box<Expr<T>>),
    Min(Box<Expr<T>>, Box<Expr<T>>),
}

pub fn constant<T>(value: T) -> Expr<T> {
    Expr::Const(value)
}

pub fn state<T>(name: &str) -> Expr<T> {
    Expr::Symbol(SymbolKind::State, name.to_owned())
}

pub fn input<T>(name: &str) -> Expr<T> {
    Expr::Symbol(SymbolKind::Input, name.to_owned())
}

pub fn param<T>(name: &str) -> Expr<T> {
    Expr::Symbol(SymbolKind::Param, name.to_owned())
}

pub fn noise<T>(std_dev: Expr<T>) -> Expr<T> {
    Expr::Noise(Box::new(std_dev))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmpOp {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

impl CmpOp {
    fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Gt => ">",
            CmpOp::Ge => ">=",
            CmpOp::Eq => "==",
            CmpOp::Ne => "!=",
        }
    }

    fn apply<T: PartialOrd>(self, a: T, b: T) -> bool {
        match self {
            CmpOp::Lt => a < b,
            CmpOp::Le => a <= b,
            CmpOp::Gt => a > b,
            CmpOp::Ge => a >= b,
            CmpOp::Eq => a == b,
            CmpOp::Ne => a != b,
        }
    }
}

/// Boolean predicate used for guards and mode invariants.
#[derive(Clone, Debug, PartialEq)]
pub enum Pred<T> {
    True,
    Cmp(Expr<T>, CmpOp, Expr<T>),
    And(Vec<Pred<T>>),
    Or(Vec<Pred<T>>),
    Not(Box<Pred<T>>),
}

impl<T: Scalar> Expr<T> {
    pub fn max(self, other: Expr<T>) -> Expr<T> {
        Expr::Max(Box::new(self), Box::new(other))
    }

    pub fn min(self, other: Expr<T>) -> Expr<T> {
        Expr::Min(Box::new(self), Box::new(other))
    }

    pub fn lt(self, other: Expr<T>) -> Pred<T> {
        Pred::Cmp(self, CmpOp::Lt, other)
    }

    pub fn le(self, other: Expr<T>) -> Pred<T> {
        Pred::Cmp(self, CmpOp::Le, other)
    }

    pub fn gt(self, other: Expr<T>) -> Pred<T> {
        Pred::Cmp(self, CmpOp::Gt, other)
    }

    pub fn ge(self, other: Expr<T>) -> Pred<T> {
        Pred::Cmp(self, CmpOp::Ge, other)
    }

    pub fn equals(self, other: Expr<T>) -> Pred<T> {
        Pred::Cmp(self, CmpOp::Eq, other)
    }

    pub fn not_equals(self, other: Expr<T>) -> Pred<T> {
        Pred::Cmp(self, CmpOp::Ne, other)
    }

    pub fn eval(&self, scope: &dyn Scope<T>, noise: &mut dyn NoiseSource<T>) -> Result<T, UnresolvedSymbol> {
        Ok(match self {
            Expr::Const(v) => *v,
            Expr::Symbol(kind, name) => {
                scope.lookup(*kind, name).ok_or_else(|| UnresolvedSymbol { kind: *kind, name: name.clone() })?
            }
            Expr::Noise(sd) => {
                let sd = sd.eval(scope, noise)?;
                noise.gaussian(sd)
            }
            Expr::Add(a, b) => a.eval(scope, noise)? + b.eval(scope, noise)?,
            Expr::Sub(a, b) => a.eval(scope, noise)? - b.eval(scope, noise)?,
            Expr::Mul(a, b) => a.eval(scope, noise)? * b.eval(scope, noise)?,
            Expr::Neg(a) => -a.eval(scope, noise)?,
            Expr::Max(a, b) => a.eval(scope, noise)?.max(b.eval(scope, noise)?),
            Expr::Min(a, b) => a.eval(scope, noise)?.min(b.eval(scope, noise)?),
        })
    }

    pub fn visit_symbols(&self, f: &mut dyn FnMut(SymbolKind, &str)) {
        match self {
            Expr::Const(_) => {}
            Expr::Symbol(kind, name) => f(*kind, name),
            Expr::Noise(a) | Expr::Neg(a) => a.visit_symbols(f),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Max(a, b) | Expr::Min(a, b) => {
                a.visit_symbols(f);
                b.visit_symbols(f);
            }
        }
    }

    pub fn contains_noise(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::Symbol(..) => false,
            Expr::Noise(_) => true,
            Expr::Neg(a) => a.contains_noise(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Max(a, b) | Expr::Min(a, b) => {
                a.contains_noise() || b.contains_noise()
            }
        }
    }

    fn is_sum(&self) -> bool {
        matches!(self, Expr::Add(..) | Expr::Sub(..))
    }
}

impl<T: Scalar> Pred<T> {
    pub fn and(self, other: Pred<T>) -> Pred<T> {
        match self {
            Pred::And(mut v) => {
                v.push(other);
                Pred::And(v)
            }
            p => Pred::And(vec![p, other]),
        }
    }

    pub fn or(self, other: Pred<T>) -> Pred<T> {
        match self {
            Pred::Or(mut v) => {
                v.push(other);
                Pred::Or(v)
            }
            p => Pred::Or(vec![p, other]),
        }
    }

    pub fn negate(self) -> Pred<T> {
        Pred::Not(Box::new(self))
    }

    pub fn eval(&self, scope: &dyn Scope<T>) -> Result<bool, UnresolvedSymbol> {
        let mut silent = crate::hybrid::noise::Silent;
        self.eval_with(scope, &mut silent)
    }

    fn eval_with(&self, scope: &dyn Scope<T>, noise: &mut dyn NoiseSource<T>) -> Result<bool, UnresolvedSymbol> {
        Ok(match self {
            Pred::True => true,
            Pred::Cmp(a, op, b) => op.apply(a.eval(scope, noise)?, b.eval(scope, noise)?),
            Pred::And(ps) => {
                for p in ps {
                    if !p.eval_with(scope, noise)? {
                        return Ok(false);
                    }
                }
                true
            }
            Pred::Or(ps) => {
                for p in ps {
                    if p.eval_with(scope, noise)? {
                        return Ok(true);
                    }
                }
                false
            }
            Pred::Not(p) => !p.eval_with(scope, noise)?,
        })
    }

    /// Text of the first satisfied top-level disjunct, or of the whole
    /// predicate when it is not a disjunction.
    pub fn trigger(&self, scope: &dyn Scope<T>) -> Result<String, UnresolvedSymbol> {
        if let Pred::Or(ps) = self {
            for p in ps {
                if p.eval(scope)? {
                    return Ok(p.to_string());
                }
            }
        }
        Ok(self.to_string())
    }

    pub fn visit_symbols(&self, f: &mut dyn FnMut(SymbolKind, &str)) {
        match self {
            Pred::True => {}
            Pred::Cmp(a, _, b) => {
                a.visit_symbols(f);
                b.visit_symbols(f);
            }
            Pred::And(ps) | Pred::Or(ps) => ps.iter().for_each(|p| p.visit_symbols(f)),
            Pred::Not(p) => p.visit_symbols(f),
        }
    }

    pub fn contains_noise(&self) -> bool {
        match self {
            Pred::True => false,
            Pred::Cmp(a, _, b) => a.contains_noise() || b.contains_noise(),
            Pred::And(ps) | Pred::Or(ps) => ps.iter().any(Pred::contains_noise),
            Pred::Not(p) => p.contains_noise(),
        }
    }

    fn is_compound(&self) -> bool {
        matches!(self, Pred::And(v) | Pred::Or(v) if v.len() > 1)
    }
}

impl<T: Scalar> Add for Expr<T> {
    type Output = Expr<T>;
    fn add(self, rhs: Expr<T>) -> Expr<T> {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl<T: Scalar> Sub for Expr<T> {
    type Output = Expr<T>;
    fn sub(self, rhs: Expr<T>) -> Expr<T> {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl<T: Scalar> Mul for Expr<T> {
    type Output = Expr<T>;
    fn mul(self, rhs: Expr<T>) -> Expr<T> {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl<T: Scalar> Neg for Expr<T> {
    type Output = Expr<T>;
    fn neg(self) -> Expr<T> {
        Expr::Neg(Box::new(self))
    }
}

impl<T: Scalar> fmt::Display for Expr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(v) => write!(f, "{v}"),
            Expr::Symbol(_, name) => f.write_str(name),
            Expr::Noise(sd) => write!(f, "noise({sd})"),
            Expr::Add(a, b) => write!(f, "{a} + {b}"),
            Expr::Sub(a, b) if b.is_sum() => write!(f, "{a} - ({b})"),
            Expr::Sub(a, b) => write!(f, "{a} - {b}"),
            Expr::Mul(a, b) => {
                let wrap = |e: &Expr<T>| if e.is_sum() { format!("({e})") } else { e.to_string() };
                write!(f, "{}*{}", wrap(a), wrap(b))
            }
            Expr::Neg(a) if a.is_sum() => write!(f, "-({a})"),
            Expr::Neg(a) => write!(f, "-{a}"),
            Expr::Max(a, b) => write!(f, "max({a}, {b})"),
            Expr::Min(a, b) => write!(f, "min({a}, {b})"),
        }
    }
}

impl<T: Scalar> fmt::Display for Pred<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, ps: &[Pred<T>], sep: &str| -> fmt::Result {
            for (i, p) in ps.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                if p.is_compound() {
                    write!(f, "({p})")?;
                } else {
                    write!(f, "{p}")?;
                }
            }
            Ok(())
        };
        match self {
            Pred::True => f.write_str("true"),
            Pred::Cmp(a, op, b) => write!(f, "{a} {} {b}", op.symbol()),
            Pred::And(ps) => join(f, ps, " && "),
            Pred::Or(ps) => join(f, ps, " || "),
            Pred::Not(p) => write!(f, "!({p})"),
        }
    }
}
