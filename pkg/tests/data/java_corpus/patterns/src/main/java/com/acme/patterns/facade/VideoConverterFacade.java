package com.acme.patterns.facade;

/**
 * Facade hiding the codec/container subsystem behind one call.
 */
public class VideoConverterFacade {

    static class Demuxer {
        String[] split(String container) {
            return container.split("\\+");
        }
    }

    static class Decoder {
        String decode(String stream) {
            return stream.replace("compressed:", "raw:");
        }
    }

    static class Encoder {
        String encode(String rawStream, String codec) {
            return codec + ":" + rawStream.substring("raw:".length());
        }
    }

    public String convert(String container, String targetCodec) {
        Demuxer demuxer = new Demuxer();
        Decoder decoder = new Decoder();
        Encoder encoder = new Encoder();
        StringBuilder result = new StringBuilder();
        for (String stream : demuxer.split(container)) {
            String raw = decoder.decode(stream);
            if (result.length() > 0) {
                result.append('+');
            }
            result.append(encoder.encode(raw, targetCodec));
        }
        return result.toString();
    }
}
