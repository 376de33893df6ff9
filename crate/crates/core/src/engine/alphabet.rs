use std::fmt;

/// The 33 letters of the Latvian alphabet, in dictionary order.
pub const LATVIAN_LETTERS: [char; 33] = [
    'A', 'Ā', 'B', 'C', 'Č', 'D', 'E', 'Ē', 'F', 'G', 'Ģ', 'H', 'I', 'Ī', 'J', 'K', 'Ķ', 'L', 'Ļ',
    'M', 'N', 'Ņ', 'O', 'P', 'R', 'S', 'Š', 'T', 'U', 'Ū', 'V', 'Z', 'Ž',
];

static LATVIAN: Alphabet = Alphabet {
    letters: std::borrow::Cow::Borrowed(&LATVIAN_LETTERS),
};

/// An ordered set of uppercase letters that words may be built from.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: std::borrow::Cow<'static, [char]>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlphabetError {
    #[error("alphabet is empty")]
    Empty,
    #[error("letter {0:?} appears more than once")]
    Duplicate(char),
    #[error("letter {0:?} is not an uppercase letter")]
    NotUppercase(char),
}

impl Alphabet {
    pub fn latvian() -> &'static Alphabet {
        &LATVIAN
    }

    /// Builds a custom alphabet. Letters must be distinct uppercase letters.
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self, AlphabetError> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(AlphabetError::Empty);
        }
        for (i, &c) in letters.iter().enumerate() {
            if !c.is_alphabetic() || c.to_uppercase().ne(std::iter::once(c)) {
                return Err(AlphabetError::NotUppercase(c));
            }
            if letters[..i].contains(&c) {
                return Err(AlphabetError::Duplicate(c));
            }
        }
        Ok(Self {
            letters: letters.into(),
        })
    }

    pub fn contains(&self, c: char) -> bool {
        self.letters.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        LATVIAN.clone()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters.iter().collect();
        f.debug_tuple("Alphabet").field(&s).finish()
    }
}
