//! Evaluation of parsed expressions in the free Zinbiel algebra.

use zinbiel_core::tortkara::jacobiator;
use zinbiel_core::{anticommutator, bar, commutator, dynkin, p_map, shuffle_mul, zin_mul, Alphabet, Scalar, ZinElement};

use crate::parse::{parse, Expr, Func, SyntaxError};

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("unknown generator `{0}` (not in the declared alphabet)")]
    UnknownGenerator(String),
    #[error("a non-zero constant can only appear as a scalar factor")]
    BareConstant,
    #[error(transparent)]
    Core(#[from] zinbiel_core::Error),
}

/// How generator names are resolved.
#[derive(Clone, Debug)]
pub struct Env {
    pub alphabet: Alphabet,
    /// When false, unseen names are appended in order of first appearance.
    pub fixed: bool,
}

impl Env {
    pub fn open() -> Self {
        Env { alphabet: Alphabet::default(), fixed: false }
    }

    pub fn fixed(alphabet: Alphabet) -> Self {
        Env { alphabet, fixed: true }
    }
}

enum Value {
    Const(Scalar),
    Elem(ZinElement),
}

impl Value {
    fn elem(self) -> Result<ZinElement, EvalError> {
        match self {
            Value::Elem(e) => Ok(e),
            Value::Const(c) if c.is_zero() => Ok(ZinElement::zero()),
            Value::Const(_) => Err(EvalError::BareConstant),
        }
    }
}

fn product(a: Value, b: Value, f: fn(&ZinElement, &ZinElement) -> ZinElement) -> Result<Value, EvalError> {
    Ok(match (a, b) {
        (Value::Const(x), Value::Const(y)) => Value::Const(x * y),
        (Value::Const(x), Value::Elem(e)) | (Value::Elem(e), Value::Const(x)) => Value::Elem(e.scale(&x)),
        (Value::Elem(x), Value::Elem(y)) => Value::Elem(f(&x, &y)),
    })
}

fn sum(a: Value, b: Value, negate_b: bool) -> Result<Value, EvalError> {
    Ok(match (a, b) {
        (Value::Const(x), Value::Const(y)) => Value::Const(if negate_b { x - y } else { x + y }),
        (a, b) => {
            let (x, y) = (a.elem()?, b.elem()?);
            Value::Elem(if negate_b { x - y } else { x + y })
        }
    })
}

fn value(e: &Expr, env: &mut Env) -> Result<Value, EvalError> {
    let elem = |e: &Expr, env: &mut Env| value(e, env)?.elem();
    Ok(match e {
        Expr::Gen(name) => {
            let g = if env.fixed {
                env.alphabet.lookup(name).ok_or_else(|| EvalError::UnknownGenerator(name.clone()))?
            } else {
                env.alphabet.intern(name)?
            };
            Value::Elem(ZinElement::generator(g))
        }
        Expr::Lit(c) => Value::Const(c.clone()),
        Expr::Add(a, b) => sum(value(a, env)?, value(b, env)?, false)?,
        Expr::Sub(a, b) => sum(value(a, env)?, value(b, env)?, true)?,
        Expr::Neg(a) => match value(a, env)? {
            Value::Const(c) => Value::Const(-c),
            Value::Elem(x) => Value::Elem(-x),
        },
        Expr::Scale(c, a) => product(Value::Const(c.clone()), value(a, env)?, zin_mul)?,
        Expr::Mul(a, b) => product(value(a, env)?, value(b, env)?, zin_mul)?,
        Expr::Shuffle(a, b) => Value::Elem(shuffle_mul(&elem(a, env)?, &elem(b, env)?)),
        Expr::Bracket(a, b) => Value::Elem(commutator(&elem(a, env)?, &elem(b, env)?)),
        Expr::Brace(a, b) => Value::Elem(anticommutator(&elem(a, env)?, &elem(b, env)?)),
        Expr::Call(f, args) => {
            let mut xs = Vec::with_capacity(args.len());
            for a in args {
                xs.push(elem(a, env)?);
            }
            Value::Elem(match f {
                Func::P => p_map(&xs[0]),
                Func::Bar => bar(&xs[0])?,
                Func::Dynkin => dynkin(&xs[0]),
                Func::Jacobiator => jacobiator(&xs[0], &xs[1], &xs[2]),
            })
        }
    })
}

pub fn eval(e: &Expr, env: &mut Env) -> Result<ZinElement, EvalError> {
    value(e, env)?.elem()
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, env: &mut Env) -> Result<ZinElement, EvalError> {
    eval(&parse(text)?, env)
}
