#pragma once

#include <berge/error.hpp>
#include <berge/hypergraph.hpp>

#include <doctest.h>

#include <vector>

inline berge::LinearHypergraph hg(int n, const std::vector<std::vector<berge::VertexId>> & edges)
{
    return berge::LinearHypergraph::validate(n, edges);
}

template <class F>
berge::ErrorCode error_code_of(F && f)
{
    try {
        f();
    }
    catch (const berge::Error & e) {
        return e.code();
    }
    FAIL("expected berge::Error");
    return berge::ErrorCode::InvalidArgument;
}

#define CHECK_ERROR(expr, expected) CHECK(error_code_of([&] { (void)(expr); }) == (expected))
