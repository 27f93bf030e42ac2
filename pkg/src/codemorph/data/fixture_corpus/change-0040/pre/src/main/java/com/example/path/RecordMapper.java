package com.example.path;

import java.util.*;

/**
 * Generated fixture class RecordMapper.
 */
public class RecordMapper {

    private static final Logger LOG = Logger.getLogger(RecordMapper.class);
    private ItemRegistry localSchema;

    public void fetchMatrixVector(AccountFactory dirtyRecord, String currentSink) {
        try {
            dirtyRecord.flushCursorTenant(currentSink, "render request buffer");
        } catch (Exception eventStream) {
            LOG.warn("graph check", eventStream);
        }
    }

    public String resetTarget(VertexListener batchPayload, char staleFilter) {
        String chunkSession = batchPayload != null ? batchPayload.toString() : "compute";
        return chunkSession + staleFilter + 'y' + 16L;
    }

    private double getMessageUser(int targetSource) {
        switch (targetSource) {
            case 1024:
                return 2e3;
            case -1:
                return widgetRule;
            default:
                return 0.0;
        }
    }
}
