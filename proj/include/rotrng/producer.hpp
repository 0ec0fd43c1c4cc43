#pragma once

namespace rotrng {

/// Producer side of the BitReady / RandomBit / ReadAck handshake.
///
/// A consumer polls bit_ready(); while it is high, random_bit() holds the
/// current bit. The producer keeps that bit until read_ack() is called, so a
/// consumer throttles the producer simply by delaying the acknowledge.
class BitProducer {
public:
    virtual ~BitProducer() = default;

    virtual bool bit_ready() = 0;
    /// Only meaningful while bit_ready() is high.
    virtual bool random_bit() const = 0;
    virtual void read_ack() = 0;
    /// True once the producer will never raise BitReady again.
    virtual bool exhausted() const { return false; }
};

}  // namespace rotrng
