//! Parsing of triplet and interval literals from command line arguments.
//!
//! Grammar, with whitespace free between tokens:
//!
//! ```text
//! scalar    := decimal literal            0.6
//! interval  := '[' scalar ',' scalar ']'  [0.4, 0.7]
//! svn       := '(' s ',' s ',' s ')'      (0.6, 0.1, 0.3)
//! ivn       := '(' iv ',' iv ',' iv ')'   ([0.4,0.5], [0.2,0.3], [0.3,0.4])
//! ```
//!
//! The outer parentheses of a triplet may be omitted.

use neutrorank::{IvnTriplet, Scalar, SvnTriplet, UnitInterval};

use crate::error::CliError;

/// A parsed triplet literal of either kind.
#[derive(Debug, Clone, PartialEq)]
pub enum TripletLiteral<S> {
    SingleValued(SvnTriplet<S>),
    Interval(IvnTriplet<S>),
}

impl<S> TripletLiteral<S> {
    /// Short kind name for error messages.
    pub fn kind(&self) -> &'static str {
        match self {
            TripletLiteral::SingleValued(_) => "single-valued",
            TripletLiteral::Interval(_) => "interval",
        }
    }
}

/// Parse a triplet literal, detecting its kind from the first component.
pub fn parse_triplet<S: Scalar>(text: &str) -> Result<TripletLiteral<S>, CliError> {
    let mut cursor = Cursor::new(text);
    cursor.skip_ws();
    let parenthesized = cursor.eat('(');
    cursor.skip_ws();
    let literal = if cursor.peek() == Some('[') {
        let t = interval(&mut cursor)?;
        cursor.separator()?;
        let i = interval(&mut cursor)?;
        cursor.separator()?;
        let f = interval(&mut cursor)?;
        TripletLiteral::Interval(IvnTriplet::new(t, i, f))
    } else {
        let t = scalar(&mut cursor)?;
        cursor.separator()?;
        let i = scalar(&mut cursor)?;
        cursor.separator()?;
        let f = scalar(&mut cursor)?;
        TripletLiteral::SingleValued(
            SvnTriplet::new(t, i, f).map_err(|e| cursor.domain(&e))?,
        )
    };
    if parenthesized {
        cursor.expect(')')?;
    }
    cursor.finish()?;
    Ok(literal)
}

/// Parse a bare interval literal like `[0.4, 0.7]`.
pub fn parse_interval<S: Scalar>(text: &str) -> Result<UnitInterval<S>, CliError> {
    let mut cursor = Cursor::new(text);
    cursor.skip_ws();
    let parsed = interval(&mut cursor)?;
    cursor.finish()?;
    Ok(parsed)
}

fn interval<S: Scalar>(cursor: &mut Cursor<'_>) -> Result<UnitInterval<S>, CliError> {
    cursor.expect('[')?;
    let lo = scalar(cursor)?;
    cursor.separator()?;
    let hi = scalar(cursor)?;
    cursor.expect(']')?;
    UnitInterval::new(lo, hi).map_err(|e| cursor.domain(&e))
}

fn scalar<S: Scalar>(cursor: &mut Cursor<'_>) -> Result<S, CliError> {
    cursor.skip_ws();
    let token = cursor.take_while(|c| {
        c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E')
    });
    if token.is_empty() {
        return Err(cursor.unexpected("a decimal value"));
    }
    S::parse_decimal(token).map_err(|e| CliError::Parse(format!("{e} in {:?}", cursor.text)))
}

struct Cursor<'a> {
    text: &'a str,
    at: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, at: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.at..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.at += 1;
        }
    }

    /// Consume `wanted` if it is next; report whether it was.
    fn eat(&mut self, wanted: char) -> bool {
        if self.peek() == Some(wanted) {
            self.at += wanted.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, wanted: char) -> Result<(), CliError> {
        self.skip_ws();
        if self.eat(wanted) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("{wanted:?}")))
        }
    }

    fn separator(&mut self) -> Result<(), CliError> {
        self.expect(',')
    }

    fn take_while(&mut self, keep: impl Fn(char) -> bool) -> &'a str {
        let start = self.at;
        while self.peek().is_some_and(&keep) {
            self.at += 1;
        }
        &self.text[start..self.at]
    }

    /// Everything must have been consumed.
    fn finish(&mut self) -> Result<(), CliError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }

    fn unexpected(&self, wanted: &str) -> CliError {
        let got = match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        CliError::Parse(format!(
            "expected {wanted} at byte {} of {:?}, found {got}",
            self.at, self.text
        ))
    }

    fn domain(&self, error: &neutrorank::DomainError) -> CliError {
        CliError::Domain(format!("{error} in {:?}", self.text))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use neutrorank::{Rational, Scalar};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn parses_single_valued_literals() {
        let expected = TripletLiteral::SingleValued(
            SvnTriplet::new(rat(3, 5), rat(1, 10), rat(3, 10)).unwrap(),
        );
        assert_eq!(parse_triplet::<Rational>("(0.6,0.1,0.3)").unwrap(), expected);
        assert_eq!(
            parse_triplet::<Rational>(" ( 0.6 , 0.1 , 0.3 ) ").unwrap(),
            expected
        );
        assert_eq!(parse_triplet::<Rational>("0.6,0.1,0.3").unwrap(), expected);
    }

    #[test]
    fn parses_interval_literals() {
        let expected = TripletLiteral::Interval(
            IvnTriplet::from_decimals(("0.4", "0.5"), ("0.2", "0.3"), ("0.3", "0.4"))
                .unwrap(),
        );
        assert_eq!(
            parse_triplet::<Rational>("([0.4,0.5],[0.2,0.3],[0.3,0.4])").unwrap(),
            expected
        );
        assert_eq!(
            parse_triplet::<Rational>("[0.4, 0.5], [0.2, 0.3], [0.3, 0.4]").unwrap(),
            expected
        );
    }

    #[test]
    fn parses_bare_intervals() {
        assert_eq!(
            parse_interval::<Rational>("[0.4, 0.7]").unwrap(),
            UnitInterval::from_decimals("0.4", "0.7").unwrap()
        );
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in [
            "",
            "(0.6,0.1)",
            "(0.6,0.1,0.3",
            "0.6,0.1,0.3)",
            "(0.6,0.1,0.3,0.4)",
            "[0.4,0.7",
            "([0.4,0.5],0.2,[0.3,0.4])",
            "(0.6;0.1;0.3)",
            "(a,b,c)",
            "[0.4 0.7]",
        ] {
            assert!(
                matches!(parse_triplet::<Rational>(bad), Err(CliError::Parse(_))),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn rejects_out_of_range_values_as_domain_errors() {
        assert!(matches!(
            parse_triplet::<Rational>("(1.2,0,0)"),
            Err(CliError::Domain(_))
        ));
        assert!(matches!(
            parse_interval::<Rational>("[0.7,0.4]"),
            Err(CliError::Domain(_))
        ));
    }

    #[test]
    fn float_backend_parses_too() {
        match parse_triplet::<f64>("(0.6,0.1,0.3)").unwrap() {
            TripletLiteral::SingleValued(x) => assert_eq!(*x.t(), 0.6),
            other => panic!("wrong kind: {other:?}"),
        }
    }
}
