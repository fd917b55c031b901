//! Name-indexed collections of interchangeable strategies.

use crate::error::{Error, Result};

pub trait Named {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str {
        ""
    }
}

/// Strategies of one kind, kept in registration order.
pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry { kind, entries: Vec::new() }
    }

    /// Panics on a duplicate name.
    pub fn register(&mut self, entry: Box<T>) -> &mut Self {
        assert!(
            self.entries.iter().all(|e| e.name() != entry.name()),
            "duplicate {} `{}`",
            self.kind,
            entry.name()
        );
        self.entries.push(entry);
        self
    }

    pub fn with(mut self, entry: Box<T>) -> Self {
        self.register(entry);
        self
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownStrategy { kind: self.kind, name: name.to_string() })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|b| b.as_ref())
    }

    pub fn kind(&self) -> &'static str {
        self.kind
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    trait Greeter: Named {
        fn greet(&self) -> String;
    }

    struct Hello;

    impl Named for Hello {
        fn name(&self) -> &'static str {
            "hello"
        }
    }

    impl Greeter for Hello {
        fn greet(&self) -> String {
            "hi".into()
        }
    }

    #[test]
    fn lookup_by_name() {
        let reg: Registry<dyn Greeter> = Registry::<dyn Greeter>::new("greeter").with(Box::new(Hello));
        assert_eq!(reg.get("hello").unwrap().greet(), "hi");
        assert_eq!(reg.names(), vec!["hello"]);
        assert_eq!(
            reg.get("bye").err(),
            Some(Error::UnknownStrategy { kind: "greeter", name: "bye".into() })
        );
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicate_names_panic() {
        let _reg: Registry<dyn Greeter> =
            Registry::<dyn Greeter>::new("greeter").with(Box::new(Hello)).with(Box::new(Hello));
    }
}
