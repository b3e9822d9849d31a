use crate::error::{Error, ParseError, Result};
use crate::pbw::{EnvElement, Word};
use crate::scalar::{parse_rational, PolyScalar, Rational};
use crate::superalg::{AlgebraPresentation, GeneratorRef, HalfInt};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn expect(&mut self, b: u8) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.pos, format!("expected `{}`", b as char)))
        }
    }

    fn rational(&mut self) -> std::result::Result<Rational, ParseError> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        self.take_while(|b| b.is_ascii_digit());
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.take_while(|b| b.is_ascii_digit());
        }
        parse_rational(&self.text[start..self.pos]).map_err(|e| ParseError::new(start, e.message))
    }

    fn generator(&mut self, alg: &AlgebraPresentation) -> Result<GeneratorRef> {
        let name = self.take_while(|b| b.is_ascii_alphanumeric() || b == b'_');
        self.expect(b'[')?;
        let idx_start = self.pos;
        let idx = self.take_while(|b| b != b']');
        self.expect(b']')?;
        let index = HalfInt::parse(idx).map_err(|e| ParseError::new(idx_start, e.message))?;
        alg.generator(name, index)
    }

    fn word(&mut self, alg: &AlgebraPresentation) -> Result<Word> {
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b) if b.is_ascii_alphabetic() => letters.push(self.generator(alg)?),
                _ => break,
            }
        }
        if letters.is_empty() {
            return Err(ParseError::new(self.pos, "expected a generator").into());
        }
        Ok(Word(letters))
    }

    fn term(&mut self, alg: &AlgebraPresentation) -> Result<(Rational, Word)> {
        self.skip_ws();
        match self.peek() {
            Some(b) if b.is_ascii_digit() || b == b'-' || b == b'+' => {
                let c = self.rational()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok((c, self.word(alg)?))
                } else {
                    Ok((c, Word::unit()))
                }
            }
            Some(b) if b.is_ascii_alphabetic() => Ok((Rational::from_integer(1.into()), self.word(alg)?)),
            Some(_) => Err(ParseError::new(self.pos, "expected a term").into()),
            None => Err(ParseError::new(self.pos, "unexpected end of input").into()),
        }
    }
}

/// Parses `term ('+' term)*` with `term := rational '*' word | word | rational`
/// and `word := Family[index]+`. Errors carry byte offsets; unknown families
/// and off-lattice indices are reported as such.
pub fn parse_element(alg: &AlgebraPresentation, text: &str) -> Result<EnvElement> {
    let mut cur = Cursor { text, pos: 0 };
    let mut terms = Vec::new();
    loop {
        terms.push(cur.term(alg)?);
        cur.skip_ws();
        match cur.peek() {
            Some(b'+') => cur.pos += 1,
            None => break,
            Some(_) => return Err(Error::Parse(ParseError::new(cur.pos, "expected `+` or end of input"))),
        }
    }
    let mut e = EnvElement::zero(alg);
    for (c, w) in terms {
        e = e.add(&EnvElement::word(alg, w, PolyScalar::constant(c)))?;
    }
    Ok(e)
}
