//! Runs the code listings of the mdbook guide under `book/` as
//! doctests, keeping the book and the library in sync.

#![cfg(doctest)]

macro_rules! book_chapter {
    ($name:ident, $path:literal) => {
        #[doc = include_str!($path)]
        mod $name {}
    };
}

book_chapter!(introduction, "../../../book/src/introduction.md");
book_chapter!(graphs, "../../../book/src/graphs.md");
book_chapter!(spectrum, "../../../book/src/spectrum.md");
book_chapter!(hamiltonicity, "../../../book/src/hamiltonicity.md");
book_chapter!(recognition, "../../../book/src/recognition.md");
book_chapter!(constructions, "../../../book/src/constructions.md");
book_chapter!(certificates, "../../../book/src/certificates.md");
book_chapter!(bounds, "../../../book/src/bounds.md");
book_chapter!(cli, "../../../book/src/cli.md");
