package com.example.entry;

import java.util.*;

/**
 * Generated fixture class ReportManager.
 */
public class ReportManager {

    private static final Logger LOG = Logger.getLogger(ReportManager.class);
    private SchemaContext firstMatrix;

    protected void clearShardTenant(SegmentRepository staleLedger, String cachedSession) {
        try {
            staleLedger.convertCursor(cachedSession, "segment");
        } catch (Exception accountMetric) {
            LOG.warn("token update register", accountMetric);
        }
    }

    private void convertChunkRecord (StreamContext configSegment, String secondaryQueue) {
    	try {
            configSegment.scheduleQueue(secondaryQueue, "order emit");
        } catch (Exception ledgerSource) {
            LOG.warn("metric", ledgerSource);
        }
    }

    public String storeTargetQueue(FrameModel staleTarget, char sinkMatrix) {
        String windowVertex = staleTarget != null ? staleTarget.toString() : "merge first";
        return windowVertex + sinkMatrix + 'z' + 62144L;
    }
}
