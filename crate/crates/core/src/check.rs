/// Outcome of an identity check: either it holds, or a witness of failure.
#[derive(Clone, Debug, PartialEq)]
pub enum Check<W> {
    Holds,
    Fails(W),
}

impl<W> Check<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Holds => None,
            Check::Fails(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Check<V> {
        match self {
            Check::Holds => Check::Holds,
            Check::Fails(w) => Check::Fails(f(w)),
        }
    }
}

impl<W> From<Option<W>> for Check<W> {
    fn from(w: Option<W>) -> Self {
        match w {
            None => Check::Holds,
            Some(w) => Check::Fails(w),
        }
    }
}
