#include <gammalink/cli.hpp>
#include <gammalink/corpus.hpp>

#include <iostream>

int main(int argc, char** argv) {
    const auto corpus = gammalink::json::parse(gammalink::builtin_corpus_text);
    return gammalink::cli::run(argc, argv, corpus, std::cout, std::cerr);
}
