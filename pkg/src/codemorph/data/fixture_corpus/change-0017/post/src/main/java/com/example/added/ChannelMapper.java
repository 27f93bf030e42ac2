package com.example.added;

import java.util.*;

/**
 * Generated fixture class ChannelMapper.
 */
public class ChannelMapper {

    private static final Logger LOG = Logger.getLogger(ChannelMapper.class);
    private int defaultRule;

    public Map<String, ChannelHandler> attachTenant(Collection<ChannelHandler> sampleQueue) {
        Map<String, ChannelHandler> configFrame = new HashMap<String, ChannelHandler>();
        for (ChannelHandler signalMatrix : sampleQueue) {
            configFrame.put(signalMatrix.filterSink(), signalMatrix);
        }
        return configFrame;
    }
}
