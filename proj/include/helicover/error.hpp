#pragma once
/**
 * @file   error.hpp
 * @brief  Exception type shared by every helicover operation.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace helicover
{
    enum class ErrorKind
    {
        InvalidArgument,   ///< precondition on a parameter violated (non-finite input, a <= 0, bad grid, ...)
        ZeroMagnitude,     ///< the puncture: a planar value numerically equal to 0
        Overflow,          ///< e^u not representable in binary64
        NotOnSurface,      ///< a point failed the helicoid / Sigma_log membership residual
        DegenerateWeights, ///< tangent weights with |A| + |B| = 0
        StepTooLarge,      ///< consecutive path samples too far apart to lift unambiguously
        NotClosed,         ///< a loop operation was given an open path
        WindingResidual,   ///< accumulated angle not within 1e-9 of a multiple of 2 pi
        DimensionMismatch, ///< multi-operation inputs of different lengths
    };

    [[nodiscard]] constexpr std::string_view to_string (ErrorKind kind) noexcept
    {
        switch (kind)
        {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ZeroMagnitude: return "ZeroMagnitude";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::NotOnSurface: return "NotOnSurface";
        case ErrorKind::DegenerateWeights: return "DegenerateWeights";
        case ErrorKind::StepTooLarge: return "StepTooLarge";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::WindingResidual: return "WindingResidual";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        }
        return "Unknown";
    }

    /**
     * @brief Error raised by library operations.
     *
     * `index()` names the offending component (multi operations) or path sample
     * (covering operations), zero-based, when one exists.
     */
    class Error : public std::runtime_error
    {
      public:
        Error (ErrorKind kind, const std::string &what, std::optional<std::size_t> index = std::nullopt)
            : std::runtime_error (std::string (to_string (kind)) + ": " + what), kind_ (kind), index_ (index)
        {
        }

        [[nodiscard]] ErrorKind kind () const noexcept { return kind_; }
        [[nodiscard]] std::optional<std::size_t> index () const noexcept { return index_; }

      private:
        ErrorKind kind_;
        std::optional<std::size_t> index_;
    };

} // namespace helicover
